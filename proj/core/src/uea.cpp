#include "udeform/uea.hpp"

#include <algorithm>

namespace udeform {

int UEAElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void UEAElement::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement UEAElement::one(SpecPtr spec) {
  UEAElement a(spec);
  PBWMonomial m;
  m.exp.assign(spec->dim(), 0);
  a.add_term(m, Scalar(1));
  return a;
}

UEAElement UEAElement::generator(SpecPtr spec, int index) {
  UEAElement a(spec);
  PBWMonomial m;
  m.exp.assign(spec->dim(), 0);
  m.exp[index] = 1;
  a.add_term(m, Scalar(1));
  return a;
}

UEAElement UEAElement::from_lie(SpecPtr spec, const LieElement& xi) {
  UEAElement a(spec);
  for (int i = 0; i < spec->dim(); ++i) {
    if (xi.coords[i].is_zero()) continue;
    PBWMonomial m;
    m.exp.assign(spec->dim(), 0);
    m.exp[i] = 1;
    a.add_term(m, xi.coords[i]);
  }
  return a;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  if (!spec_) spec_ = o.spec_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  if (!spec_) spec_ = o.spec_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement UEAElement::operator*(const Scalar& c) const {
  UEAElement out(spec_);
  if (c.is_zero()) return out;
  for (const auto& [m, t] : terms_) out.add_term(m, t * c);
  return out;
}

namespace {

std::vector<int> monomial_word(const PBWMonomial& m) {
  std::vector<int> w;
  for (std::size_t i = 0; i < m.exp.size(); ++i)
    for (std::uint32_t k = 0; k < m.exp[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

const UEAElement& UEAContext::normal_order_word(const std::vector<int>& word) {
  auto it = cache_.find(word);
  if (it != cache_.end()) return it->second;

  if (static_cast<int>(word.size()) > spec_->degree_cap())
    throw Error(ErrorCode::DegreeCapExceeded,
                "word length exceeds degree cap " +
                    std::to_string(spec_->degree_cap()));

  UEAElement result(spec_);
  // Find the first adjacent inversion.
  int inv = -1;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) {
      inv = static_cast<int>(i);
      break;
    }
  if (inv < 0) {
    PBWMonomial m;
    m.exp.assign(spec_->dim(), 0);
    for (int g : word) ++m.exp[g];
    result.add_term(m, Scalar(1));
  } else {
    // e_j e_i = e_i e_j + [e_j, e_i] with j > i.
    std::vector<int> swapped = word;
    std::swap(swapped[inv], swapped[inv + 1]);
    result += normal_order_word(swapped);
    for (const auto& [k, c] : spec_->bracket_basis(word[inv], word[inv + 1])) {
      std::vector<int> contracted;
      contracted.reserve(word.size() - 1);
      contracted.insert(contracted.end(), word.begin(), word.begin() + inv);
      contracted.push_back(k);
      contracted.insert(contracted.end(), word.begin() + inv + 2, word.end());
      result += normal_order_word(contracted) * Scalar(mpq_class(c));
    }
  }
  auto [pos, ok] = cache_.emplace(word, std::move(result));
  return pos->second;
}

UEAElement UEAContext::product(const UEAElement& a, const UEAElement& b) {
  UEAElement out(spec_);
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<int> wa = monomial_word(ma);
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> w = wa;
      std::vector<int> wb = monomial_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out += normal_order_word(w) * (ca * cb);
    }
  }
  return out;
}

UEAElement UEAContext::power(const UEAElement& a, int n) {
  UEAElement out = UEAElement::one(spec_);
  for (int i = 0; i < n; ++i) out = product(out, a);
  return out;
}

TensorElement2 UEAContext::coproduct(const UEAElement& a) {
  TensorElement2 out(spec_);
  for (const auto& [m, c] : a.terms()) {
    auto it = coproduct_cache_.find(m);
    if (it == coproduct_cache_.end()) {
      TensorElement2 delta = TensorElement2::one(spec_);
      for (int g : monomial_word(m)) {
        UEAElement eg = UEAElement::generator(spec_, g);
        UEAElement one = UEAElement::one(spec_);
        TensorElement2 primitive = tensor_product(eg, one);
        primitive += tensor_product(one, eg);
        delta = product2(delta, primitive);
      }
      it = coproduct_cache_.emplace(m, std::move(delta)).first;
    }
    out += it->second * c;
  }
  return out;
}

Scalar UEAContext::counit(const UEAElement& a) const {
  for (const auto& [m, c] : a.terms())
    if (m.is_one()) return c;
  return Scalar(0);
}

UEAElement UEAContext::pochhammer_rising(const UEAElement& h,
                                         const Scalar& shift, int k) {
  UEAElement out = UEAElement::one(spec_);
  for (int j = 0; j < k; ++j) {
    UEAElement factor = h;
    factor += UEAElement::one(spec_) * (shift + Scalar(j));
    out = product(out, factor);
  }
  return out;
}

TensorElement2 UEAContext::tensor_product(const UEAElement& a,
                                          const UEAElement& b) {
  TensorElement2 out(spec_);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term({ma, mb}, ca * cb);
  return out;
}

TensorElement2 UEAContext::product2(const TensorElement2& a,
                                    const TensorElement2& b) {
  TensorElement2 out(spec_);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      UEAElement left(spec_), right(spec_);
      left.add_term(ka[0], Scalar(1));
      right.add_term(kb[0], Scalar(1));
      UEAElement l = product(left, right);
      UEAElement lt(spec_), rt(spec_);
      lt.add_term(ka[1], Scalar(1));
      rt.add_term(kb[1], Scalar(1));
      UEAElement r = product(lt, rt);
      Scalar c = ca * cb;
      for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms())
          out.add_term({ml, mr}, c * cl * cr);
    }
  return out;
}

TensorElement3 UEAContext::product3(const TensorElement3& a,
                                    const TensorElement3& b) {
  TensorElement3 out(spec_);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::array<UEAElement, 3> legs;
      for (int leg = 0; leg < 3; ++leg) {
        std::vector<int> w = monomial_word(ka[leg]);
        std::vector<int> wb = monomial_word(kb[leg]);
        w.insert(w.end(), wb.begin(), wb.end());
        legs[leg] = normal_order_word(w);
      }
      Scalar c = ca * cb;
      for (const auto& [m0, c0] : legs[0].terms())
        for (const auto& [m1, c1] : legs[1].terms())
          for (const auto& [m2, c2] : legs[2].terms())
            out.add_term({m0, m1, m2}, c * c0 * c1 * c2);
    }
  return out;
}

TensorElement3 UEAContext::coproduct_left(const TensorElement2& t) {
  TensorElement3 out(spec_);
  for (const auto& [k, c] : t.terms()) {
    UEAElement leg(spec_);
    leg.add_term(k[0], Scalar(1));
    TensorElement2 delta = coproduct(leg);
    for (const auto& [dk, dc] : delta.terms())
      out.add_term({dk[0], dk[1], k[1]}, c * dc);
  }
  return out;
}

TensorElement3 UEAContext::coproduct_right(const TensorElement2& t) {
  TensorElement3 out(spec_);
  for (const auto& [k, c] : t.terms()) {
    UEAElement leg(spec_);
    leg.add_term(k[1], Scalar(1));
    TensorElement2 delta = coproduct(leg);
    for (const auto& [dk, dc] : delta.terms())
      out.add_term({k[0], dk[0], dk[1]}, c * dc);
  }
  return out;
}

TensorElement3 UEAContext::embed_left(const TensorElement2& t) {
  TensorElement3 out(spec_);
  PBWMonomial one;
  one.exp.assign(spec_->dim(), 0);
  for (const auto& [k, c] : t.terms()) out.add_term({k[0], k[1], one}, c);
  return out;
}

TensorElement3 UEAContext::embed_right(const TensorElement2& t) {
  TensorElement3 out(spec_);
  PBWMonomial one;
  one.exp.assign(spec_->dim(), 0);
  for (const auto& [k, c] : t.terms()) out.add_term({one, k[0], k[1]}, c);
  return out;
}

UEAElement UEAContext::counit_left(const TensorElement2& t) {
  UEAElement out(spec_);
  for (const auto& [k, c] : t.terms())
    if (k[0].is_one()) out.add_term(k[1], c);
  return out;
}

UEAElement UEAContext::counit_right(const TensorElement2& t) {
  UEAElement out(spec_);
  for (const auto& [k, c] : t.terms())
    if (k[1].is_one()) out.add_term(k[0], c);
  return out;
}

mpz_class stirling_first(int k, int j) {
  if (j < 0 || j > k) return 0;
  // s(k+1, j) = s(k, j-1) + k * s(k, j), s(0,0) = 1.
  std::vector<mpz_class> row(1, mpz_class(1));
  for (int n = 0; n < k; ++n) {
    std::vector<mpz_class> next(n + 2, mpz_class(0));
    for (int m = 0; m <= n; ++m) {
      next[m + 1] += row[m];
      next[m] += n * row[m];
    }
    row = std::move(next);
  }
  return row[j];
}

std::vector<ShufflePair> leibniz_shuffle_expand(int n) {
  std::vector<ShufflePair> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ShufflePair p;
    for (int i = 0; i < n; ++i)
      (mask & (1u << i) ? p.left : p.right).push_back(i);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace udeform
