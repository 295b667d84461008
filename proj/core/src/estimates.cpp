#include "udeform/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace udeform {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-9;

double weight_up(double R, double r, int n) {
  return round_up(std::exp(std::lgamma(n + 1.0) * (R - 1.0) + n * std::log(r)));
}

EstimateRow make_row(std::string params, double lhs, double rhs,
                     bool known = true) {
  EstimateRow row;
  row.params = std::move(params);
  row.lhs = lhs;
  row.rhs = rhs;
  row.margin = lhs == 0.0 ? kInf : rhs / lhs;
  if (!known)
    row.verdict = RowVerdict::Unknown;
  else
    row.verdict = lhs <= rhs * (1.0 + kSlack) ? RowVerdict::Pass : RowVerdict::Fail;
  return row;
}

}  // namespace

const char* to_string(RowVerdict v) {
  switch (v) {
    case RowVerdict::Pass: return "Pass";
    case RowVerdict::Fail: return "Fail";
    case RowVerdict::Unknown: return "Unknown";
  }
  return "?";
}

bool EstimateReport::pass() const {
  for (const auto& r : rows)
    if (r.verdict == RowVerdict::Fail) return false;
  return true;
}

int EstimateReport::unknown_count() const {
  int n = 0;
  for (const auto& r : rows)
    if (r.verdict == RowVerdict::Unknown) ++n;
  return n;
}

std::string EstimateReport::json() const {
  nlohmann::json j;
  j["id"] = id;
  j["pass"] = pass();
  j["unknown"] = unknown_count();
  auto rows_j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["params"] = r.params;
    row["lhs"] = r.lhs;
    row["rhs"] = std::isinf(r.rhs) ? nlohmann::json("inf") : nlohmann::json(r.rhs);
    row["margin"] =
        std::isinf(r.margin) ? nlohmann::json("inf") : nlohmann::json(r.margin);
    row["verdict"] = to_string(r.verdict);
    rows_j.push_back(row);
  }
  j["rows"] = rows_j;
  return j.dump();
}

std::string EstimateReport::csv() const {
  std::ostringstream os;
  os << "params,lhs,rhs,margin,verdict\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.params << "," << r.lhs << "," << r.rhs << "," << r.margin << ","
       << to_string(r.verdict) << "\n";
  return os.str();
}

EquicontinuityConstants EquicontinuityConstants::abelian(double c, double m,
                                                         int num_terms,
                                                         double t1, double t2) {
  EquicontinuityConstants k;
  k.family = TwistFamily::Abelian;
  k.R = 0.5;
  k.m = m;
  k.r0 = std::min(t1, t2) / 2.0;
  k.N = num_terms;
  k.C = 1.0;
  k.T = round_up(c * c * m * num_terms);
  return k;
}

EquicontinuityConstants EquicontinuityConstants::axb(double m, double r1,
                                                     double r2) {
  EquicontinuityConstants k;
  k.family = TwistFamily::AxB;
  k.R = 1.0;
  k.m = m;
  k.r0 = std::min(r1, r2) / 4.0;
  k.N = static_cast<int>(std::floor(4.0 / k.r0)) + 1;
  k.C = std::ldexp(1.0, k.N - 1);
  k.T = round_up(4.0 * m / k.r0);
  return k;
}

EquicontinuityConstants EquicontinuityConstants::sl(double big_m, double r1,
                                                    double r2, double norm_2h) {
  EquicontinuityConstants k;
  k.family = TwistFamily::SlHeis;
  k.R = 1.0;
  k.m = big_m;
  k.r0 = std::min(r1, r2) / 4.0;
  k.N = static_cast<int>(std::ceil(norm_2h / k.r0));
  k.C = std::ldexp(1.0, k.N);
  double denom = std::min(1.0, k.r0);
  k.T = round_up(16.0 * big_m / (denom * denom));
  return k;
}

EstimateReport cauchy_check(const Representation& rep, const Poly& v, double R,
                            double r, const std::vector<int>& word, int K,
                            const BaseSeminorm& q) {
  EstimateReport report;
  report.id = "cauchy";
  int n = static_cast<int>(word.size());
  Poly acted = rep.act_word(word, v);

  AnalyticQuery lq{R, r, q, K};
  AnalyticQuery rq{R, 2.0 * r, q, K};
  SeminormEnclosure lhs = analytic_seminorm(rep, acted, lq);
  SeminormEnclosure rhs = analytic_seminorm(rep, v, rq);
  double factor_up =
      round_up(std::exp(std::lgamma(n + 1.0) * (1.0 - R) - n * std::log(r)));
  double factor_dn =
      round_down(std::exp(std::lgamma(n + 1.0) * (1.0 - R) - n * std::log(r)));

  // Sound side discipline: certified upper of the dominated seminorm
  // against a partial-sum lower of the dominating one, so the row can
  // only pass when the true inequality holds.
  std::ostringstream ps;
  ps << "sound R=" << R << " r=" << r << " n=" << n;
  if (n == 0) {
    // Both sides expand over the same derivative sups s_k >= 0, so the
    // inequality follows once every weight ratio (r/2r)^k is dominated.
    // This stays decisive at near-equality where enclosure brackets cannot.
    double worst = 0.0;
    for (int k = 0; k <= K; ++k)
      worst = std::max(worst, round_up(std::exp(k * (std::log(r) -
                                                     std::log(2.0 * r)))));
    report.rows.push_back(make_row(ps.str(), worst, factor_dn));
  } else {
    bool known = lhs.tail_certified && lhs.finite();
    report.rows.push_back(
        make_row(ps.str(), lhs.upper, round_down(factor_dn * rhs.lower), known));
  }

  // Term-wise domination with the shared word-expansion evaluator: the
  // k-th term of the left series against the (k+n)-th of the right.
  std::vector<SeminormEnclosure> lad_acted = sup_unit_ball_ladder(rep, acted, q, K);
  std::vector<SeminormEnclosure> lad_v = sup_unit_ball_ladder(rep, v, q, K + n);
  for (int k = 0; k <= K; ++k) {
    double lt = round_up(weight_up(R, r, k) * lad_acted[k].upper);
    double rt =
        round_up(factor_up * weight_up(R, 2.0 * r, k + n) * lad_v[k + n].upper);
    std::ostringstream os;
    os << "term k=" << k;
    report.rows.push_back(make_row(os.str(), lt, rt));
    if (lt == 0.0 && rt == 0.0) break;  // derivative tower exhausted
  }
  return report;
}

EstimateReport malleable_continuity_check(const Representation& rep,
                                          const Poly& v, const Poly& w,
                                          double R, double r, int K,
                                          const BaseSeminorm& q) {
  EstimateReport report;
  report.id = "malleable";
  double rr = std::pow(2.0, R) * r;
  SeminormEnclosure lhs = analytic_seminorm(rep, v * w, {R, r, q, K});
  SeminormEnclosure pv = analytic_seminorm(rep, v, {R, rr, q, K});
  SeminormEnclosure pw = analytic_seminorm(rep, w, {R, rr, q, K});
  bool known = lhs.tail_certified && lhs.finite();
  std::ostringstream ps;
  ps << "sound R=" << R << " r=" << r;
  report.rows.push_back(
      make_row(ps.str(), lhs.upper, round_down(pv.lower * pw.lower), known));

  std::vector<SeminormEnclosure> lad_v = sup_unit_ball_ladder(rep, v, q, K);
  std::vector<SeminormEnclosure> lad_w = sup_unit_ball_ladder(rep, w, q, K);
  std::vector<SeminormEnclosure> lad_vw = sup_unit_ball_ladder(rep, v * w, q, K);
  std::vector<double> sv, sw;
  for (int k = 0; k <= K; ++k) {
    sv.push_back(lad_v[k].upper);
    sw.push_back(lad_w[k].upper);
  }
  for (int n = 0; n <= K; ++n) {
    double lt = round_up(weight_up(R, r, n) * lad_vw[n].upper);
    double rt = 0.0;
    for (int k = 0; k <= n; ++k)
      rt = round_up(rt + round_up(weight_up(R, rr, k) * sv[k]) *
                             round_up(weight_up(R, rr, n - k) * sw[n - k]));
    std::ostringstream os;
    os << "conv n=" << n;
    report.rows.push_back(make_row(os.str(), lt, rt));
    if (lt == 0.0 && rt == 0.0) break;
  }
  return report;
}

EstimateReport equicontinuity_check(const EquicontinuityConstants& consts,
                                    const TwistSeries& F,
                                    const Representation& rep, const Poly& v,
                                    const Poly& w, double r, int n_max, int K,
                                    const BaseSeminorm& q,
                                    double lhs_fault_scale) {
  if (consts.family != F.family)
    throw Error(ErrorCode::InvalidInput, "constants and series family differ");
  double want_R = consts.family == TwistFamily::Abelian ? 0.5 : 1.0;
  if (consts.R != want_R)
    throw Error(ErrorCode::UnsupportedFamilyOrder,
                "order R does not match the family's equicontinuity bound");
  if (n_max > F.order())
    throw Error(ErrorCode::InvalidInput, "n_max exceeds the series order");

  EstimateReport report;
  report.id = "equicontinuity";
  double R = consts.R;
  AnalyticQuery rhs_q{R, consts.t * r, q, K};
  SeminormEnclosure pv = analytic_seminorm(rep, v, rhs_q);
  SeminormEnclosure pw = analytic_seminorm(rep, w, rhs_q);
  bool known = pv.tail_certified && pv.finite() && pw.tail_certified && pw.finite();
  double rhs_base = round_up(pv.upper * pw.upper);

  // Lower-side truncation can be shallow; fewer nonnegative terms only
  // lower the bound.
  int k_lhs = std::min(K, 6);

  for (int n = 0; n <= n_max; ++n) {
    // Largest-coefficient factorized terms give the left lower bound.
    std::vector<std::pair<double, const TensorKey<2>*>> ranked;
    for (const auto& [key, c] : F.F[n].terms())
      ranked.push_back({scalar_abs_lower(c), &key});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    if (ranked.size() > 3) ranked.resize(3);

    double weight = round_down(
        std::exp(n * std::log(consts.m * lhs_fault_scale) - std::lgamma(n + 1.0)));
    if (n == 0) weight = 1.0;
    double lhs = 0.0;
    for (const auto& [c_lo, key] : ranked) {
      Poly av = rep.act_monomial((*key)[0], v);
      Poly aw = rep.act_monomial((*key)[1], w);
      double lv = analytic_seminorm(rep, av, {R, r, q, k_lhs}).lower;
      double lw = analytic_seminorm(rep, aw, {R, r, q, k_lhs}).lower;
      lhs = std::max(lhs, round_down(weight * c_lo * lv * lw));
    }
    double rhs = round_up(consts.C * std::pow(consts.T, n) * rhs_base);
    std::ostringstream os;
    os << "n=" << n;
    report.rows.push_back(make_row(os.str(), lhs, rhs, known));
  }
  return report;
}

EstimateReport entire_order0_bound_check(int d, const Poly& f, double r0,
                                         double r1, int K) {
  EstimateReport report;
  report.id = "entire0";
  SpecPtr spec = LieAlgebraSpec::builtin("gl:" + std::to_string(d));
  Representation rep = Representation::gl(spec, d);

  // C = sum k^k/(k! 3^k); the term ratio tends to e/3 < 0.91. The
  // truncated sum rounded down is a valid lower bound of C.
  double c_lo = 0.0, term = 1.0;
  for (int k = 0;; ++k) {
    c_lo = round_down(c_lo + round_down(term));
    double next = term * std::pow(1.0 + 1.0 / (k + 1.0), k + 1.0) / 3.0;
    if (next < 1e-15) break;
    term = next;
  }

  SeminormEnclosure lhs =
      analytic_seminorm(rep, f, {0.0, r1, BaseSeminorm::polydisk(r0), K});
  double big_r = r0 * (1.0 + 3.0 * d * d * r1);
  double rhs =
      round_down(c_lo * base_eval(BaseSeminorm::polydisk(big_r), f).lower);
  bool known = lhs.tail_certified && lhs.finite();
  std::ostringstream os;
  os << "d=" << d << " r0=" << r0 << " r1=" << r1;
  report.rows.push_back(make_row(os.str(), lhs.upper, rhs, known));
  return report;
}

EstimateReport axb_inclusion_checks(const Poly& f, double r0, double r1,
                                    int K) {
  if (r0 <= 0.0 || r0 > 1.0)
    throw Error(ErrorCode::InvalidInput, "requires 0 < r0 <= 1");
  EstimateReport report;
  report.id = "axb-inclusions";
  SpecPtr spec = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(spec);
  BaseSeminorm q = BaseSeminorm::exp_weighted(r0);
  SeminormEnclosure qf = base_eval(q, f);

  double growth = round_down(4.0 * std::exp(r0) / r0);
  int k_max = std::min(K, f.degree() + 3);
  std::vector<SeminormEnclosure> lad = sup_unit_ball_ladder(rep, f, q, k_max);
  for (int k = 0; k <= k_max; ++k) {
    std::ostringstream os;
    os << "word-sup k=" << k;
    if (k == 0) {
      // Level 0 of the ladder is q(f) itself, so both sides are the same
      // quantity; compare the shared evaluation instead of its bracket.
      report.rows.push_back(make_row(os.str(), qf.upper, qf.upper));
      continue;
    }
    double bound = round_down(std::pow(growth, k) * qf.lower);
    report.rows.push_back(make_row(os.str(), lad[k].upper, bound));
  }

  // Reverse inclusion: p^(1)_{r1,q_{r0}}(f) >= e^{-r0} m_{r1}(f).
  SeminormEnclosure p = analytic_seminorm(rep, f, {1.0, r1, q, K});
  double m_up = base_eval(BaseSeminorm::deriv_sum(r1), f).upper;
  double rhs = round_up(round_up(std::exp(-r0)) * m_up);
  EstimateRow row;
  std::ostringstream os;
  os << "deriv-sum r1=" << r1;
  row.params = os.str();
  row.lhs = p.lower;
  row.rhs = rhs;
  row.margin = rhs == 0.0 ? kInf : p.lower / rhs;
  row.verdict =
      p.lower >= rhs * (1.0 - kSlack) ? RowVerdict::Pass : RowVerdict::Fail;
  report.rows.push_back(row);
  return report;
}

}  // namespace udeform
