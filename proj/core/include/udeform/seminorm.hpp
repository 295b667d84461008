#ifndef UDEFORM_SEMINORM_HPP
#define UDEFORM_SEMINORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "udeform/representation.hpp"

namespace udeform {

/// Base seminorms on polynomial spaces. rate is the polydisk radius r0
/// for PolydiskSup, the exponential rate r for ExpWeighted and the
/// weight rate r for DerivSum (anchored at the point (1,...,1)).
enum class BaseKind { PolydiskSup, ExpWeighted, DerivSum };

struct BaseSeminorm {
  BaseKind kind;
  double rate;

  static BaseSeminorm polydisk(double r0) { return {BaseKind::PolydiskSup, r0}; }
  static BaseSeminorm exp_weighted(double r) { return {BaseKind::ExpWeighted, r}; }
  static BaseSeminorm deriv_sum(double r) { return {BaseKind::DerivSum, r}; }
};

/// Certified interval [lower, upper] for a seminorm value; upper may be
/// +infinity when no tail certificate exists.
struct SeminormEnclosure {
  double lower = 0.0;
  double upper = 0.0;
  int K = 0;
  bool tail_certified = true;
  std::optional<double> ratio;

  bool finite() const;
  std::string json() const;
};

struct AnalyticQuery {
  double R = 1.0;
  double r = 0.5;
  BaseSeminorm q = BaseSeminorm::polydisk(1.0);
  int K = 16;
  int word_budget = 4096;
};

SeminormEnclosure base_eval(const BaseSeminorm& q, const Poly& f);

/// Linear-in-|coefficients| upper functional dominating q; used where a
/// bound must distribute over sums of word actions.
double base_linear_upper(const BaseSeminorm& q, const Poly& f);

/// Brackets sup over unit-ball words of length n of q(word |> f).
/// Upper: sum over all d^n basis words when d^n fits the budget, else a
/// single aggregated absolute-coefficient majorant per level. Lower:
/// best basis word (beam search past the budget), scaled into the ball
/// when a basis vector has norm > 1.
SeminormEnclosure sup_unit_ball_bracket(const Representation& rep, int n,
                                        const Poly& f, const BaseSeminorm& q,
                                        int word_budget = 4096);

/// All levels 0..n_max in one pass over the word tree; entry n equals
/// sup_unit_ball_bracket(rep, n, f, q, word_budget).
std::vector<SeminormEnclosure> sup_unit_ball_ladder(const Representation& rep,
                                                    const Poly& f,
                                                    const BaseSeminorm& q,
                                                    int n_max,
                                                    int word_budget = 4096);

struct PartialSumRow {
  int n;
  double term_lower, term_upper;
  double cum_lower, cum_upper;
};

/// p^(R)_{r,q}(f) = sum_n n!^{R-1} r^n sup-over-ball terms, truncated at
/// K with a geometric tail certificate from the trailing upper-term
/// ratios. rows, when non-null, receives the per-order data.
SeminormEnclosure analytic_seminorm(const Representation& rep, const Poly& f,
                                    const AnalyticQuery& query,
                                    std::vector<PartialSumRow>* rows = nullptr);

std::string partial_sums_csv(const std::vector<PartialSumRow>& rows);

enum class Membership { CertifiedMember, CertifiedNonMember, Unknown };

const char* to_string(Membership m);

struct MembershipResult {
  Membership verdict = Membership::Unknown;
  std::string evidence;
};

/// Membership of f among the analytic vectors of order R up to radius
/// r0, for the base seminorm of the query (query.r is ignored).
MembershipResult membership_verdict(const Representation& rep, const Poly& f,
                                    double R, double r0,
                                    const AnalyticQuery& query);

struct DivergenceWitness {
  bool success = false;
  double ratio = 0.0;
  int terms_to_exceed = -1;  // -1 when the target is never exceeded
  double base_value = 0.0;
  std::string note;
};

/// Geometric lower-bound witness for divergence of p^(1)_{r,q}(f) from
/// an exact eigenvector relation rho(xi) f = lambda f. Succeeds iff the
/// certified ratio r|lambda|/||xi|| is >= 1; terms_to_exceed counts the
/// partial sums needed to pass target * q_lower(f).
DivergenceWitness divergence_witness(const Representation& rep, const Poly& f,
                                     const LieElement& xi, const Scalar& lambda,
                                     double r, const BaseSeminorm& q,
                                     double target = 1e6);

// Directed-rounding helpers shared by the numeric modules.
double round_up(double x);
double round_down(double x);
double scalar_abs_upper(const Scalar& c);
double scalar_abs_lower(const Scalar& c);

/// Same exponents, coefficients replaced by upper bounds of their
/// absolute values (a real nonnegative float-mode polynomial).
Poly abs_majorant(const Poly& f);

}  // namespace udeform

#endif
