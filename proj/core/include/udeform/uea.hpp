#ifndef UDEFORM_UEA_HPP
#define UDEFORM_UEA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "udeform/lie_algebra.hpp"
#include "udeform/scalar.hpp"

namespace udeform {

/// Exponent vector over the ordered basis; represents the normally
/// ordered product e_1^{a_1} ... e_d^{a_d}.
struct PBWMonomial {
  std::vector<std::uint32_t> exp;

  int degree() const {
    int s = 0;
    for (auto e : exp) s += static_cast<int>(e);
    return s;
  }
  bool is_one() const { return degree() == 0; }
  bool operator==(const PBWMonomial&) const = default;
};

/// Graded-lexicographic order; used for canonical term ordering everywhere.
struct GradedLex {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exp < b.exp;
  }
};

/// Sparse element of U(g) in the PBW basis. No zero coefficients stored.
class UEAElement {
public:
  using TermMap = std::map<PBWMonomial, Scalar, GradedLex>;

  UEAElement() = default;
  explicit UEAElement(SpecPtr spec) : spec_(std::move(spec)) {}

  static UEAElement one(SpecPtr spec);
  static UEAElement generator(SpecPtr spec, int index);
  static UEAElement from_lie(SpecPtr spec, const LieElement& xi);

  const SpecPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  void add_term(const PBWMonomial& m, const Scalar& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  UEAElement operator*(const Scalar& c) const;
  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }

private:
  SpecPtr spec_;
  TermMap terms_;
};

template <std::size_t K>
using TensorKey = std::array<PBWMonomial, K>;

template <std::size_t K>
struct TensorKeyLess {
  bool operator()(const TensorKey<K>& a, const TensorKey<K>& b) const {
    GradedLex lt;
    for (std::size_t i = 0; i < K; ++i) {
      if (lt(a[i], b[i])) return true;
      if (lt(b[i], a[i])) return false;
    }
    return false;
  }
};

/// Sparse element of U(g)^{tensor K}, componentwise canonical.
template <std::size_t K>
class TensorElement {
public:
  using TermMap = std::map<TensorKey<K>, Scalar, TensorKeyLess<K>>;

  TensorElement() = default;
  explicit TensorElement(SpecPtr spec) : spec_(std::move(spec)) {}

  static TensorElement one(SpecPtr spec) {
    TensorElement t(spec);
    TensorKey<K> key;
    for (auto& m : key) m.exp.assign(spec->dim(), 0);
    t.add_term(key, Scalar(1));
    return t;
  }

  const SpecPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorKey<K>& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    if (!spec_) spec_ = o.spec_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    if (!spec_) spec_ = o.spec_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

  TensorElement operator*(const Scalar& c) const {
    TensorElement out(spec_);
    if (c.is_zero()) return out;
    for (const auto& [k, t] : terms_) out.add_term(k, t * c);
    return out;
  }

  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
  SpecPtr spec_;
  TermMap terms_;
};

using TensorElement2 = TensorElement<2>;
using TensorElement3 = TensorElement<3>;

/// Normal-ordering engine for one Lie algebra spec. Rewrites arbitrary
/// generator words into the PBW basis via adjacent transpositions with
/// bracket insertion; memoizes word results.
class UEAContext {
public:
  explicit UEAContext(SpecPtr spec) : spec_(std::move(spec)) {}

  const SpecPtr& spec() const { return spec_; }

  /// Normal form of a product of generators e_{w[0]} e_{w[1]} ... .
  const UEAElement& normal_order_word(const std::vector<int>& word);

  UEAElement product(const UEAElement& a, const UEAElement& b);
  UEAElement power(const UEAElement& a, int n);

  /// Coproduct: the algebra morphism with primitive generators.
  TensorElement2 coproduct(const UEAElement& a);

  Scalar counit(const UEAElement& a) const;

  /// Rising Pochhammer prod_{j=0}^{k-1}(h + shift + j) in U(g).
  UEAElement pochhammer_rising(const UEAElement& h, const Scalar& shift, int k);

  // Tensor operations (leg-wise products use the PBW product).
  TensorElement2 tensor_product(const UEAElement& a, const UEAElement& b);
  TensorElement2 product2(const TensorElement2& a, const TensorElement2& b);
  TensorElement3 product3(const TensorElement3& a, const TensorElement3& b);
  TensorElement3 coproduct_left(const TensorElement2& t);   // (Delta x id)
  TensorElement3 coproduct_right(const TensorElement2& t);  // (id x Delta)
  TensorElement3 embed_left(const TensorElement2& t);       // t (x) 1
  TensorElement3 embed_right(const TensorElement2& t);      // 1 (x) t
  UEAElement counit_left(const TensorElement2& t);   // (eps x id)
  UEAElement counit_right(const TensorElement2& t);  // (id x eps)

private:
  SpecPtr spec_;
  std::map<std::vector<int>, UEAElement> cache_;
  std::map<PBWMonomial, TensorElement2, GradedLex> coproduct_cache_;
};

/// Unsigned Stirling numbers of the first kind.
mpz_class stirling_first(int k, int j);

/// All (k, n-k)-shuffle splittings of xi_list into (left word, right word)
/// index sequences; 2^n pairs in total.
struct ShufflePair {
  std::vector<int> left;   // indices into the input list, increasing
  std::vector<int> right;  // complement, increasing
};
std::vector<ShufflePair> leibniz_shuffle_expand(int n);

}  // namespace udeform

#endif
