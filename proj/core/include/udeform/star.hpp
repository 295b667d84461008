#ifndef UDEFORM_STAR_HPP
#define UDEFORM_STAR_HPP

#include <string>
#include <vector>

#include "udeform/representation.hpp"
#include "udeform/twist.hpp"

namespace udeform {

/// a * b = sum_n (hbar^n / n!) T_n with T_n = mu(F_n |> (a (x) b)).
/// certified means every term beyond the listed ones vanishes for a
/// structural reason recorded in the certificate tag.
struct StarTermList {
  std::vector<Poly> T;
  int structural_bound = 0;
  bool certified = false;
  std::string certificate;
};

StarTermList star_terms(UEAContext& ctx, const TwistSeries& F,
                        const Representation& rep, const Poly& a,
                        const Poly& b);

Poly star_eval(UEAContext& ctx, const TwistSeries& F, const Representation& rep,
               const Poly& a, const Poly& b, const Scalar& hbar);

/// (a * b) * c - a * (b * c) at a concrete hbar; zero for a valid twist.
Poly assoc_residual(UEAContext& ctx, const TwistSeries& F,
                    const Representation& rep, const Poly& a, const Poly& b,
                    const Poly& c, const Scalar& hbar);

/// First-order antisymmetrization mu(F_1 |> (f(x)g)) - mu(F_1 |> (g(x)f)).
Poly poisson_bracket(const TwistSeries& F, const Representation& rep,
                     const Poly& f, const Poly& g);

/// Closed-form Poisson bracket of the heis-sl family on d variables.
Poly poisson_formula_sl(const Poly& f, const Poly& g, int d,
                        const std::vector<Scalar>& c_s);

/// Coefficient list of the hbar-polynomial a * b, weights 1/n! folded in.
std::vector<Poly> hbar_coefficients(UEAContext& ctx, const TwistSeries& F,
                                    const Representation& rep, const Poly& a,
                                    const Poly& b);

}  // namespace udeform

#endif
