#ifndef UDEFORM_REPRESENTATION_HPP
#define UDEFORM_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "udeform/poly.hpp"
#include "udeform/uea.hpp"

namespace udeform {

/// One summand of a first-order differential operator: coeff * z^mono * d_dvar.
/// dvar = -1 means no derivative (a multiplication operator); only used to
/// exercise the malleability check, which rejects such operators.
struct OperatorTerm {
  Scalar coeff;
  Exponents mono;
  int dvar;
};

struct MalleabilityReport {
  bool ok = true;
  std::string witness;  // empty when ok
};

/// Differential-operator action of a Lie algebra on polynomials. Each
/// basis vector acts by a first-order operator (a derivation); the
/// homomorphism property [rho(e_i), rho(e_j)] = rho([e_i,e_j]) is
/// verified on monomials at construction.
class Representation {
public:
  /// Validates the homomorphism property on all monomials up to
  /// probe_degree; throws EmbeddingMismatch on failure.
  static Representation create(SpecPtr spec, int nvars,
                               std::vector<std::vector<OperatorTerm>> generators,
                               int probe_degree = 4);

  /// e_k acts by d/dz_k on d variables.
  static Representation abelian(SpecPtr spec);
  /// Basis (E, H) acting on one variable: E by d/dz, H by -z d/dz.
  static Representation axb(SpecPtr spec);
  /// E_{nm} acts by z^n d_m on d variables; H_s by z^s d_s - z^{s+1} d_{s+1}.
  static Representation heis_sl(SpecPtr spec, int d);
  /// All d^2 matrix units acting by E_{nm} = z^n d_m (spec "gl:d").
  static Representation gl(SpecPtr spec, int d);

  const SpecPtr& spec() const { return spec_; }
  int nvars() const { return nvars_; }
  const std::vector<OperatorTerm>& generator_terms(int i) const {
    return gens_[i];
  }

  Poly act_generator(int i, const Poly& f) const;

  /// Action of a generator word, leftmost applied to the result of the
  /// rest: rho(w0 w1 ... ) = rho(w0) o rho(w1) o ... .
  Poly act_word(const std::vector<int>& word, const Poly& f) const;

  Poly act_monomial(const PBWMonomial& m, const Poly& f) const;
  Poly act_uea(const UEAElement& a, const Poly& f) const;

  struct TensorActionTerm {
    Poly left, right;
    Scalar coeff;
  };
  std::vector<TensorActionTerm> act_tensor(const TensorElement2& t,
                                           const Poly& f, const Poly& g) const;

  /// Leibniz rule for basis generators on monomial pairs up to degree D,
  /// plus the n-fold shuffle identity for n <= 4.
  MalleabilityReport check_malleability(int probe_degree) const;

private:
  Representation() = default;

  SpecPtr spec_;
  int nvars_ = 0;
  std::vector<std::vector<OperatorTerm>> gens_;
};

inline Poly mu_pointwise(const Poly& f, const Poly& g) { return f * g; }

}  // namespace udeform

#endif
