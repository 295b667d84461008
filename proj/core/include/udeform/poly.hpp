#ifndef UDEFORM_POLY_HPP
#define UDEFORM_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "udeform/scalar.hpp"

namespace udeform {

using Exponents = std::vector<std::uint32_t>;

struct ExpGradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

/// Sparse multivariate polynomial; no zero coefficients stored.
class Poly {
public:
  using TermMap = std::map<Exponents, Scalar, ExpGradedLex>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Scalar& c);
  static Poly variable(int nvars, int index, std::uint32_t power = 1);
  static Poly monomial(int nvars, Exponents exp, const Scalar& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int degree_in(int var) const;

  void add_term(const Exponents& e, const Scalar& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator*(const Scalar& c) const;
  Poly operator*(const Poly& o) const;  // pointwise product mu
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly derivative(int var) const;
  Scalar eval(const std::vector<Scalar>& point) const;

  /// Parses expressions like "3/2*z1^2*z3 - i*z2 + 1". Variables are
  /// z1..zd (plain "z" allowed when nvars == 1, "x","y" aliases for
  /// z1,z2 when nvars == 2).
  static Poly parse(const std::string& text, int nvars,
                    ScalarMode mode = ScalarMode::Exact);

  static Poly from_json(const std::string& json_text);
  std::string json() const;
  std::string str() const;

private:
  int nvars_ = 0;
  TermMap terms_;
};

}  // namespace udeform

#endif
