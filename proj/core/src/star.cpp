#include "udeform/star.hpp"

#include <algorithm>

namespace udeform {

namespace {

Poly apply_tensor(const Representation& rep, const TensorElement2& t,
                  const Poly& a, const Poly& b) {
  Poly out(rep.nvars());
  for (const auto& term : rep.act_tensor(t, a, b))
    out += (term.left * term.right) * term.coeff;
  return out;
}

// Family-specific order past which every term vanishes identically.
int structural_bound(const TwistSeries& F, const Representation& rep,
                     const Poly& a, const Poly& b, std::string& tag) {
  switch (F.family) {
    case TwistFamily::Abelian:
      tag = "derivative capacity: n > min(deg a, deg b)";
      return std::min(a.degree(), b.degree());
    case TwistFamily::AxB:
      tag = "E-power kills each leg: n > deg a + deg b";
      return a.degree() + b.degree();
    case TwistFamily::SlHeis:
      tag = "right leg carries n factors of d_d: n > deg_{z^d}(b)";
      return b.degree_in(rep.nvars() - 1);
  }
  tag = "none";
  return F.order();
}

}  // namespace

StarTermList star_terms(UEAContext& ctx, const TwistSeries& F,
                        const Representation& rep, const Poly& a,
                        const Poly& b) {
  (void)ctx;
  StarTermList out;
  out.structural_bound = structural_bound(F, rep, a, b, out.certificate);
  out.certified = out.structural_bound <= F.order();
  if (!out.certified)
    out.certificate = "series order " + std::to_string(F.order()) +
                      " reached before the structural bound";
  int n_max = std::min(out.structural_bound, F.order());
  for (int n = 0; n <= n_max; ++n)
    out.T.push_back(apply_tensor(rep, F.F[n], a, b));
  while (!out.T.empty() && out.T.back().is_zero() &&
         static_cast<int>(out.T.size()) > 1)
    out.T.pop_back();
  return out;
}

Poly star_eval(UEAContext& ctx, const TwistSeries& F, const Representation& rep,
               const Poly& a, const Poly& b, const Scalar& hbar) {
  StarTermList terms = star_terms(ctx, F, rep, a, b);
  if (!terms.certified)
    throw Error(ErrorCode::TruncationNotCertified, terms.certificate);
  if (hbar.mode() != ScalarMode::Exact)
    throw Error(ErrorCode::ModeMismatch, "star evaluation is exact-mode only");
  Poly out(rep.nvars());
  Scalar hpow(1);
  for (std::size_t n = 0; n < terms.T.size(); ++n) {
    out += terms.T[n] * (hpow / factorial_scalar(static_cast<int>(n)));
    hpow *= hbar;
  }
  return out;
}

Poly assoc_residual(UEAContext& ctx, const TwistSeries& F,
                    const Representation& rep, const Poly& a, const Poly& b,
                    const Poly& c, const Scalar& hbar) {
  Poly ab = star_eval(ctx, F, rep, a, b, hbar);
  Poly bc = star_eval(ctx, F, rep, b, c, hbar);
  return star_eval(ctx, F, rep, ab, c, hbar) -
         star_eval(ctx, F, rep, a, bc, hbar);
}

Poly poisson_bracket(const TwistSeries& F, const Representation& rep,
                     const Poly& f, const Poly& g) {
  if (F.order() < 1)
    throw Error(ErrorCode::InvalidInput, "twist series order must be >= 1");
  return apply_tensor(rep, F.F[1], f, g) - apply_tensor(rep, F.F[1], g, f);
}

Poly poisson_formula_sl(const Poly& f, const Poly& g, int d,
                        const std::vector<Scalar>& c_s) {
  auto zdel = [d](int zvar, const Poly& p, int dvar) {
    // z^{zvar} d_{dvar} p, 1-based indices.
    return Poly::variable(d, zvar - 1) * p.derivative(dvar - 1);
  };
  auto cartan = [&](const Poly& p) {
    Poly out(d);
    for (int s = 1; s <= d - 1; ++s)
      out += (zdel(s, p, s) - zdel(s + 1, p, s + 1)) * c_s[s - 1];
    return out;
  };
  Scalar half = Scalar::rational(1, 2);
  Poly out = zdel(1, g, d) * cartan(f) * half - zdel(1, f, d) * cartan(g) * half;
  for (int s = 2; s <= d - 1; ++s)
    out += zdel(1, f, s) * zdel(s, g, d) - zdel(1, g, s) * zdel(s, f, d);
  return out;
}

std::vector<Poly> hbar_coefficients(UEAContext& ctx, const TwistSeries& F,
                                    const Representation& rep, const Poly& a,
                                    const Poly& b) {
  StarTermList terms = star_terms(ctx, F, rep, a, b);
  if (!terms.certified)
    throw Error(ErrorCode::TruncationNotCertified, terms.certificate);
  std::vector<Poly> out;
  for (std::size_t n = 0; n < terms.T.size(); ++n)
    out.push_back(terms.T[n] * (Scalar(1) / factorial_scalar(static_cast<int>(n))));
  return out;
}

}  // namespace udeform
