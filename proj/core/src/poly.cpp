#include "udeform/poly.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace udeform {

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index, std::uint32_t power) {
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[index] = power;
  p.add_term(e, Scalar(1));
  return p;
}

Poly Poly::monomial(int nvars, Exponents exp, const Scalar& c) {
  Poly p(nvars);
  p.add_term(exp, c);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(ErrorCode::InvalidInput, "exponent vector length != nvars");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  if (nvars_ != o.nvars_)
    throw Error(ErrorCode::InvalidInput, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
  if (nvars_ != o.nvars_)
    throw Error(ErrorCode::InvalidInput, "polynomial variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, t] : terms_) out.add_term(e, t * c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw Error(ErrorCode::InvalidInput, "polynomial variable count mismatch");
  Poly out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    Scalar k = c.mode() == ScalarMode::Float
                   ? Scalar(std::complex<double>(static_cast<double>(e[var])))
                   : Scalar(static_cast<long>(e[var]));
    out.add_term(d, c * k);
  }
  return out;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  Scalar acc(0);
  if (!terms_.empty() && terms_.begin()->second.mode() == ScalarMode::Float)
    acc = Scalar(std::complex<double>(0.0));
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

namespace {

struct Lexer {
  std::string s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    return s[pos++];
  }
};

// factor := number | 'i' | var ('^' int)? ; term := factor ('*'? factor)*
Poly parse_term(Lexer& lx, int nvars, ScalarMode mode) {
  Poly acc = Poly::constant(nvars, mode == ScalarMode::Exact
                                       ? Scalar(1)
                                       : Scalar(std::complex<double>(1.0)));
  bool first = true;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+' || c == '-' || c == ')') break;
    if (c == '*') {
      lx.get();
      continue;
    }
    if (c == '(') {
      // parenthesized scalar coefficient, e.g. "(3/4 - 2i)*z1"
      lx.get();
      std::string inner;
      while (!lx.eof() && lx.peek() != ')') inner.push_back(lx.get());
      if (lx.eof())
        throw Error(ErrorCode::InvalidInput, "unbalanced '(' in polynomial");
      lx.get();
      acc = acc * Scalar::parse(inner, mode);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (!lx.eof() &&
             (std::isdigit(static_cast<unsigned char>(lx.peek())) ||
              lx.peek() == '/' || lx.peek() == '.'))
        num.push_back(lx.get());
      acc = acc * Scalar::parse(num, mode);
    } else if (c == 'i' || c == 'I') {
      lx.get();
      acc = acc * (mode == ScalarMode::Exact
                       ? Scalar::i()
                       : Scalar(std::complex<double>(0.0, 1.0)));
    } else if (c == 'z' || c == 'x' || c == 'y') {
      lx.get();
      int index = 0;
      if (c == 'x') {
        index = 0;
      } else if (c == 'y') {
        index = 1;
      } else {
        std::string digits;
        while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek())))
          digits.push_back(lx.get());
        index = digits.empty() ? 0 : std::stoi(digits) - 1;
      }
      if (index < 0 || index >= nvars)
        throw Error(ErrorCode::InvalidInput, "variable index out of range");
      std::uint32_t power = 1;
      if (!lx.eof() && lx.peek() == '^') {
        lx.get();
        std::string digits;
        while (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek())))
          digits.push_back(lx.get());
        power = static_cast<std::uint32_t>(std::stoul(digits));
      }
      acc = acc * Poly::variable(nvars, index, power);
    } else {
      throw Error(ErrorCode::InvalidInput,
                  std::string("unexpected character '") + c + "' in polynomial");
    }
    first = false;
  }
  if (first)
    throw Error(ErrorCode::InvalidInput, "empty term in polynomial");
  return acc;
}

}  // namespace

Poly Poly::parse(const std::string& text, int nvars, ScalarMode mode) {
  Lexer lx{text};
  Poly out(nvars);
  bool negate = false;
  if (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-'))
    negate = lx.get() == '-';
  while (!lx.eof()) {
    Poly term = parse_term(lx, nvars, mode);
    if (negate)
      out -= term;
    else
      out += term;
    if (lx.eof()) break;
    char c = lx.get();
    if (c == '+')
      negate = false;
    else if (c == '-')
      negate = true;
    else
      throw Error(ErrorCode::InvalidInput, "expected '+' or '-' in polynomial");
    if (lx.eof())
      throw Error(ErrorCode::InvalidInput, "dangling operator in polynomial");
  }
  return out;
}

Poly Poly::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int nvars = j.at("vars").get<int>();
  Poly p(nvars);
  for (const auto& t : j.value("terms", nlohmann::json::array())) {
    Exponents e = t.at("exp").get<Exponents>();
    mpq_class re(t.value("re", "0")), im(t.value("im", "0"));
    re.canonicalize();
    im.canonicalize();
    p.add_term(e, Scalar(re, im));
  }
  return p;
}

std::string Poly::json() const {
  nlohmann::json j;
  j["vars"] = nvars_;
  auto terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json t;
    t["exp"] = e;
    if (c.mode() == ScalarMode::Exact) {
      t["re"] = c.re().get_str();
      t["im"] = c.im().get_str();
    } else {
      t["re_f"] = c.value().real();
      t["im_f"] = c.value().imag();
    }
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*z" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace udeform
