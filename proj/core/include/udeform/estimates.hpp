#ifndef UDEFORM_ESTIMATES_HPP
#define UDEFORM_ESTIMATES_HPP

#include <string>
#include <vector>

#include "udeform/seminorm.hpp"
#include "udeform/star.hpp"

namespace udeform {

/// Constants of the per-family equicontinuity bounds. t is the radius
/// rescale factor of the dominating side.
struct EquicontinuityConstants {
  TwistFamily family;
  double R;
  double m;   // hbar-disk radius
  double r0;  // minimal radius
  int N;
  double C;
  double T;
  double t = 2.0;

  /// c = max||r_k|| + max||s_k||, num_terms the length of the r-sum.
  static EquicontinuityConstants abelian(double c, double m, int num_terms,
                                         double t1, double t2);
  static EquicontinuityConstants axb(double m, double r1, double r2);
  /// norm_2h = ||2H|| in the matrix embedding.
  static EquicontinuityConstants sl(double big_m, double r1, double r2,
                                    double norm_2h);
};

enum class RowVerdict { Pass, Fail, Unknown };

const char* to_string(RowVerdict v);

struct EstimateRow {
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs / lhs, inf when lhs == 0
  RowVerdict verdict = RowVerdict::Unknown;
};

struct EstimateReport {
  std::string id;
  std::vector<EstimateRow> rows;

  bool pass() const;
  int unknown_count() const;
  std::string json() const;
  std::string csv() const;
};

/// Cauchy-type estimate: p^(R)_{r,q}(word |> v) against
/// (n!^{1-R}/r^n) p^(R)_{2r,q}(v), plus the term-wise domination the
/// proof actually uses (rows "term k"). Word entries are basis indices
/// of unit-norm generators.
EstimateReport cauchy_check(const Representation& rep, const Poly& v, double R,
                            double r, const std::vector<int>& word, int K,
                            const BaseSeminorm& q);

/// Continuity of multiplication: p^(R)_{r,q}(v w) against
/// p^(R)_{2^R r,q}(v) p^(R)_{2^R r,q}(w), with the binomial-convolution
/// domination at every truncation level.
EstimateReport malleable_continuity_check(const Representation& rep,
                                          const Poly& v, const Poly& w,
                                          double R, double r, int K,
                                          const BaseSeminorm& q);

/// Per-order twist-term bound: factorized lower evaluation of
/// (hbar^n/n!) F_n |> (v (x) w) against C T^n p_{t r}(v) p_{t r}(w).
/// lhs_fault_scale multiplies the left side by scale^n; it exists so
/// tests can verify the comparison is not vacuous.
EstimateReport equicontinuity_check(const EquicontinuityConstants& consts,
                                    const TwistSeries& F,
                                    const Representation& rep, const Poly& v,
                                    const Poly& w, double r, int n_max, int K,
                                    const BaseSeminorm& q,
                                    double lhs_fault_scale = 1.0);

/// p^(0)_{r1,||.||_{r0}}(f) against C ||f||_{r0(1+3d^2 r1)} over the
/// full matrix-unit ball, C = sum k^k/(k! 3^k).
EstimateReport entire_order0_bound_check(int d, const Poly& f, double r0,
                                         double r1, int K = 16);

/// Both inclusion inequalities of the one-variable lowering/raising
/// picture: word sups against (4 e^{r0}/r0)^k q_{r0}(f), and
/// p^(1)_{r1,q_{r0}}(f) against e^{-r0} m_{r1}(f).
EstimateReport axb_inclusion_checks(const Poly& f, double r0, double r1,
                                    int K = 16);

}  // namespace udeform

#endif
