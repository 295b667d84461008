#include "udeform/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace udeform {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::MalleabilityViolation: return "MalleabilityViolation";
    case ErrorCode::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorCode::TruncationNotCertified: return "TruncationNotCertified";
    case ErrorCode::UnsupportedFamilyOrder: return "UnsupportedFamilyOrder";
  }
  return "UnknownError";
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_mode(o);
  if (mode_ == ScalarMode::Float) {
    f_ += o.f_;
  } else {
    re_ += o.re_;
    im_ += o.im_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_mode(o);
  if (mode_ == ScalarMode::Float) {
    f_ -= o.f_;
  } else {
    re_ -= o.re_;
    im_ -= o.im_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_mode(o);
  if (mode_ == ScalarMode::Float) {
    f_ *= o.f_;
  } else {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_mode(o);
  if (o.is_zero())
    throw Error(ErrorCode::InvalidInput, "scalar division by zero");
  if (mode_ == ScalarMode::Float) {
    f_ /= o.f_;
  } else {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  return *this;
}

mpq_class Scalar::abs_sq() const {
  if (mode_ == ScalarMode::Float)
    throw Error(ErrorCode::ModeMismatch, "abs_sq requires exact mode");
  return re_ * re_ + im_ * im_;
}

namespace {

// One summand of a scalar literal: optional rational, optional trailing 'i'.
bool parse_rational(const std::string& s, mpq_class& out) {
  if (s.empty()) return false;
  try {
    out = mpq_class(s);
    out.canonicalize();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

Scalar Scalar::parse(const std::string& text, ScalarMode mode) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty scalar literal");

  if (mode == ScalarMode::Float) {
    // "a", "a+bi", "a-bi" with float literals.
    double re = 0, im = 0;
    char* end = nullptr;
    re = std::strtod(s.c_str(), &end);
    if (end && *end != '\0') {
      std::string rest(end);
      if (rest == "i") {
        im = re;
        re = 0;
      } else {
        char* end2 = nullptr;
        im = std::strtod(rest.c_str(), &end2);
        if (!end2 || std::string(end2) != "i")
          throw Error(ErrorCode::InvalidInput, "bad float scalar: " + text);
      }
    }
    return Scalar(std::complex<double>(re, im));
  }

  // Split into summands at top-level '+'/'-' (not the leading sign).
  mpq_class re(0), im(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string part = s.substr(pos, end - pos);
    bool imag = false;
    if (!part.empty() && (part.back() == 'i' || part.back() == 'I')) {
      imag = true;
      part.pop_back();
      if (!part.empty() && part.back() == '*') part.pop_back();
    }
    if (part.size() > 1 && part.front() == '+') part.erase(0, 1);
    mpq_class q;
    if (part.empty() || part == "+" )
      q = 1;
    else if (part == "-")
      q = -1;
    else if (!parse_rational(part, q))
      throw Error(ErrorCode::InvalidInput, "bad scalar literal: " + text);
    if (imag)
      im += q;
    else
      re += q;
    pos = end;
  }
  return Scalar(re, im);
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (mode_ == ScalarMode::Float) {
    os << f_.real();
    if (f_.imag() != 0) os << (f_.imag() > 0 ? "+" : "") << f_.imag() << "i";
    return os.str();
  }
  if (im_ == 0) {
    os << re_;
  } else if (re_ == 0) {
    os << im_ << "i";
  } else {
    os << re_ << (im_ > 0 ? "+" : "") << im_ << "i";
  }
  return os.str();
}

Scalar factorial_scalar(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(mpq_class(f));
}

Scalar binomial_scalar(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(mpq_class(b));
}

}  // namespace udeform
