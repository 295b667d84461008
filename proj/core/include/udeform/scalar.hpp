#ifndef UDEFORM_SCALAR_HPP
#define UDEFORM_SCALAR_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "udeform/errors.hpp"

namespace udeform {

/// Coefficient mode of a computation. Exact scalars are Gaussian
/// rationals (arbitrary-precision rational real and imaginary part),
/// float scalars are complex doubles. A single computation never
/// mixes modes.
enum class ScalarMode { Exact, Float };

class Scalar {
public:
  Scalar() : mode_(ScalarMode::Exact), re_(0), im_(0) {}

  Scalar(long n) : mode_(ScalarMode::Exact), re_(n), im_(0) {}
  Scalar(int n) : mode_(ScalarMode::Exact), re_(n), im_(0) {}

  Scalar(mpq_class re, mpq_class im = 0)
      : mode_(ScalarMode::Exact), re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  explicit Scalar(std::complex<double> z)
      : mode_(ScalarMode::Float), re_(0), im_(0), f_(z) {}

  static Scalar rational(long num, long den) {
    return Scalar(mpq_class(num, den));
  }

  /// Gaussian rational from four integers: (rn/rd) + (in/id)*i.
  static Scalar gaussian(long rn, long rd, long in, long id) {
    return Scalar(mpq_class(rn, rd), mpq_class(in, id));
  }

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  ScalarMode mode() const { return mode_; }
  bool exact() const { return mode_ == ScalarMode::Exact; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  std::complex<double> value() const {
    if (mode_ == ScalarMode::Float) return f_;
    return {re_.get_d(), im_.get_d()};
  }

  bool is_zero() const {
    if (mode_ == ScalarMode::Float) return f_ == std::complex<double>(0.0);
    return re_ == 0 && im_ == 0;
  }

  bool is_real() const {
    return mode_ == ScalarMode::Float ? f_.imag() == 0.0 : im_ == 0;
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(Scalar a) {
    if (a.mode_ == ScalarMode::Float) {
      a.f_ = -a.f_;
    } else {
      a.re_ = -a.re_;
      a.im_ = -a.im_;
    }
    return a;
  }

  bool operator==(const Scalar& o) const {
    if (mode_ != o.mode_) return false;
    if (mode_ == ScalarMode::Float) return f_ == o.f_;
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// |z|^2 as an exact rational (exact mode only).
  mpq_class abs_sq() const;

  /// Parses "p/q", "p/q+r/s i", "3", "-1/2 i", or a float literal.
  static Scalar parse(const std::string& text, ScalarMode mode = ScalarMode::Exact);

  std::string str() const;

private:
  void check_mode(const Scalar& o) const {
    if (mode_ != o.mode_)
      throw Error(ErrorCode::ModeMismatch, "scalar mode mismatch");
  }

  ScalarMode mode_;
  mpq_class re_, im_;
  std::complex<double> f_{0.0, 0.0};
};

Scalar factorial_scalar(int n);
Scalar binomial_scalar(int n, int k);

}  // namespace udeform

#endif
