#include "udeform/seminorm.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace udeform {

namespace {

constexpr double kEps = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Nonnegative-coefficient majorant polynomial, exponent -> coefficient.
using AbsPoly = std::map<Exponents, double, ExpGradedLex>;

std::complex<double> eval_complex(const Poly& f,
                                  const std::vector<std::complex<double>>& z) {
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> t = c.value();
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= z[i];
    acc += t;
  }
  return acc;
}

AbsPoly abs_poly(const Poly& f) {
  AbsPoly out;
  for (const auto& [e, c] : f.terms()) out[e] = scalar_abs_upper(c);
  return out;
}

int abs_degree(const AbsPoly& p) {
  int d = 0;
  for (const auto& [e, c] : p) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

// Radial majorant coefficients A_k = sum_{|alpha|=k} |c_alpha|.
std::vector<double> radial_majorant(const AbsPoly& p) {
  std::vector<double> A(abs_degree(p) + 1, 0.0);
  for (const auto& [e, c] : p) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    A[s] = round_up(A[s] + c);
  }
  return A;
}

double eval_radial_up(const std::vector<double>& A, double rho) {
  double acc = 0.0, p = 1.0;
  for (double a : A) {
    acc += a * p;
    p *= rho;
  }
  return round_up(acc);
}

// sup_{rho >= 0} (sum A_k rho^k) e^{-r rho}, certified from above. The
// function decreases past deg/r, so the sup lives on [0, deg/r]; grid
// bound max P(rho_{i+1}) e^{-r rho_i}, refined by zooming.
double exp_weighted_sup_upper(const std::vector<double>& A, double r) {
  int deg = static_cast<int>(A.size()) - 1;
  if (deg <= 0) return A.empty() ? 0.0 : round_up(A[0]);
  double lo = 0.0, hi = deg / r;
  double bound = 0.0;
  const int grid = 256;
  for (int round = 0; round < 8; ++round) {
    double best = 0.0;
    int best_i = 0;
    double h = (hi - lo) / grid;
    bound = 0.0;
    for (int i = 0; i < grid; ++i) {
      double cell = eval_radial_up(A, lo + h * (i + 1)) *
                    round_up(std::exp(-r * (lo + h * i)));
      cell = round_up(cell);
      bound = std::max(bound, cell);
      if (cell >= best) {
        best = cell;
        best_i = i;
      }
    }
    double nlo = lo + h * std::max(0, best_i - 1);
    double nhi = std::min(hi, lo + h * (best_i + 2));
    lo = nlo;
    hi = nhi;
    if (hi - lo < 1e-14 * (1.0 + hi)) break;
  }
  return round_up(bound);
}

double exp_weighted_lower(const Poly& f, double r) {
  int nvars = f.nvars();
  int deg = f.degree();
  double best = 0.0;
  auto probe = [&](const std::vector<std::complex<double>>& z) {
    double norm2 = 0.0;
    for (const auto& zi : z) norm2 += std::norm(zi);
    double v = std::abs(eval_complex(f, z)) * std::exp(-r * std::sqrt(norm2));
    best = std::max(best, round_down(v));
  };
  std::vector<double> rhos;
  for (int k = 0; k <= deg; ++k) rhos.push_back(k / r);
  rhos.push_back(1.0);
  rhos.push_back(std::sqrt(static_cast<double>(nvars)));
  for (double rho : rhos) {
    for (int j = 0; j < nvars; ++j) {
      std::vector<std::complex<double>> z(nvars, 0.0);
      z[j] = rho;
      probe(z);
      z[j] = -rho;
      probe(z);
    }
    std::vector<std::complex<double>> diag(
        nvars, rho / std::sqrt(static_cast<double>(nvars)));
    probe(diag);
  }
  return best;
}

void enumerate_exact_degree(int nvars, int total,
                            const std::function<void(const Exponents&)>& fn) {
  Exponents e(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      e[var] = static_cast<std::uint32_t>(remaining);
      fn(e);
      e[var] = 0;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      rec(var + 1, remaining - k);
    }
    e[var] = 0;
  };
  if (nvars == 0) return;
  rec(0, total);
}

double multinomial_double(int j, const Exponents& beta) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(j));
  for (auto b : beta) {
    mpz_class fb;
    mpz_fac_ui(fb.get_mpz_t(), b);
    num /= fb;
  }
  return num.get_d();
}

Poly multi_derivative(const Poly& f, const Exponents& beta) {
  Poly out = f;
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::uint32_t k = 0; k < beta[i]; ++k) out = out.derivative(static_cast<int>(i));
  return out;
}

// m_r(f) = sum_j r^j sum over ordered j-tuples |d_tuple f(1,...,1)|;
// tuples collapse to multi-indices with multinomial weights. Exact up
// to the final |.| rounding, so both bounds come from the same sum.
std::pair<double, double> deriv_sum_bracket(const Poly& f, double r) {
  int nvars = f.nvars();
  int deg = f.degree();
  double up = 0.0, dn = 0.0;
  std::vector<Scalar> ones;
  bool flt = !f.terms().empty() &&
             f.terms().begin()->second.mode() == ScalarMode::Float;
  for (int i = 0; i < nvars; ++i)
    ones.push_back(flt ? Scalar(std::complex<double>(1.0)) : Scalar(1));
  double rpow = 1.0;
  for (int j = 0; j <= deg; ++j) {
    enumerate_exact_degree(nvars, j, [&](const Exponents& beta) {
      Scalar v = multi_derivative(f, beta).eval(ones);
      double w = multinomial_double(j, beta);
      up = round_up(up + round_up(rpow * w * scalar_abs_upper(v)));
      dn = round_down(dn + round_down(rpow * w * scalar_abs_lower(v)));
    });
    rpow *= r;
  }
  return {dn, up};
}

double polydisk_upper_abs(const AbsPoly& p, double r0) {
  double acc = 0.0;
  for (const auto& [e, c] : p) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    acc = round_up(acc + round_up(c * std::pow(r0, s)));
  }
  return acc;
}

// W(k) = (k/(e r))^k bounds sup_rho rho^k e^{-r rho}; linear in A_k.
double exp_weighted_linear_upper_abs(const AbsPoly& p, double r) {
  double acc = 0.0;
  for (const auto& [e, c] : p) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    double w = s == 0 ? 1.0 : std::pow(s / (std::exp(1.0) * r), s);
    acc = round_up(acc + round_up(c * round_up(w)));
  }
  return acc;
}

double deriv_sum_linear_upper_abs(const AbsPoly& p, double r) {
  double acc = 0.0;
  for (const auto& [e, c] : p) {
    Poly mono = Poly::monomial(static_cast<int>(e.size()), e, Scalar(1));
    acc = round_up(acc + round_up(c * deriv_sum_bracket(mono, r).second));
  }
  return acc;
}

double linear_upper_abs(const BaseSeminorm& q, const AbsPoly& p) {
  switch (q.kind) {
    case BaseKind::PolydiskSup: return polydisk_upper_abs(p, q.rate);
    case BaseKind::ExpWeighted: return exp_weighted_linear_upper_abs(p, q.rate);
    case BaseKind::DerivSum: return deriv_sum_linear_upper_abs(p, q.rate);
  }
  return kInf;
}

// One summand of an absolute-value operator majorant.
struct AbsOpTerm {
  double coeff;
  Exponents mono;
  int dvar;
};

AbsPoly apply_abs_ops(const std::vector<std::vector<AbsOpTerm>>& gens,
                      const AbsPoly& p, int nvars) {
  AbsPoly out;
  for (const auto& gen : gens)
    for (const auto& term : gen)
      for (const auto& [e, c] : p) {
        if (term.dvar >= 0 && e[term.dvar] == 0) continue;
        Exponents ne = e;
        double factor = 1.0;
        if (term.dvar >= 0) {
          factor = static_cast<double>(ne[term.dvar]);
          --ne[term.dvar];
        }
        for (int i = 0; i < nvars; ++i) ne[i] += term.mono[i];
        double add = round_up(c * factor * term.coeff);
        auto [it, inserted] = out.emplace(ne, add);
        if (!inserted) it->second = round_up(it->second + add);
      }
  return out;
}

double basis_scale_down(const Representation& rep, int j) {
  double norm_up = round_up(rep.spec()->basis_norm(j));
  if (norm_up <= 1.0) return 1.0;
  return round_down(1.0 / norm_up);
}

// cap_j = sup over the unit ball of |xi^j|. For the coordinate max norm
// this is 1; for a Frobenius embedding it is sqrt((G^{-1})_{jj}) with G
// the exact Gram matrix of the embedded basis (the basis need not be
// orthogonal, so caps can sit on either side of 1/||e_j||).
std::vector<double> coefficient_caps_up(const LieAlgebraSpec& spec) {
  int d = spec.dim();
  std::vector<double> caps(d, 1.0);
  if (spec.norm_model() != NormModel::Frobenius || !spec.has_embedding())
    return caps;
  const auto& emb = spec.embedding();
  std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d, 0));
  std::vector<std::vector<mpq_class>> inv(d, std::vector<mpq_class>(d, 0));
  for (int i = 0; i < d; ++i) {
    inv[i][i] = 1;
    for (int j = i; j < d; ++j) {
      mpq_class s = 0;
      for (std::size_t a = 0; a < emb[i].size(); ++a)
        for (std::size_t b = 0; b < emb[i][a].size(); ++b)
          s += emb[i][a][b] * emb[j][a][b];
      M[i][j] = s;
      M[j][i] = s;
    }
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      // Dependent embedding: no finite coefficient bound exists.
      caps.assign(d, kInf);
      return caps;
    }
    std::swap(M[piv], M[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class p = M[col][col];
    for (int c = 0; c < d; ++c) {
      M[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || M[r][col] == 0) continue;
      mpq_class f = M[r][col];
      for (int c = 0; c < d; ++c) {
        M[r][c] -= f * M[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  for (int j = 0; j < d; ++j)
    caps[j] = round_up(std::sqrt(round_up(inv[j][j].get_d())));
  return caps;
}

}  // namespace

double round_up(double x) {
  if (x == 0.0 || std::isinf(x)) return x;
  return x > 0 ? x * (1 + kEps) : x * (1 - kEps);
}

double round_down(double x) {
  if (x == 0.0 || std::isinf(x)) return x;
  double y = x > 0 ? x * (1 - kEps) : x * (1 + kEps);
  return y < 0 ? 0.0 : y;  // seminorm quantities are nonnegative
}

double scalar_abs_upper(const Scalar& c) {
  if (c.mode() == ScalarMode::Float) return round_up(std::abs(c.value()));
  return round_up(std::sqrt(round_up(c.abs_sq().get_d())));
}

double scalar_abs_lower(const Scalar& c) {
  if (c.mode() == ScalarMode::Float) return round_down(std::abs(c.value()));
  return round_down(std::sqrt(round_down(c.abs_sq().get_d())));
}

Poly abs_majorant(const Poly& f) {
  Poly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    out.add_term(e, Scalar(std::complex<double>(scalar_abs_upper(c))));
  return out;
}

bool SeminormEnclosure::finite() const { return upper < kInf; }

std::string SeminormEnclosure::json() const {
  nlohmann::json j;
  j["lower"] = lower;
  if (finite())
    j["upper"] = upper;
  else
    j["upper"] = "inf";
  j["K"] = K;
  j["tail_certified"] = tail_certified;
  if (ratio) j["ratio"] = *ratio;
  return j.dump();
}

SeminormEnclosure base_eval(const BaseSeminorm& q, const Poly& f) {
  SeminormEnclosure out;
  out.K = 0;
  if (f.is_zero()) return out;
  switch (q.kind) {
    case BaseKind::PolydiskSup: {
      out.upper = polydisk_upper_abs(abs_poly(f), q.rate);
      if (f.terms().size() == 1) {
        // Single monomial: the torus value |c| r0^{|alpha|} is the sup.
        const auto& [e, c] = *f.terms().begin();
        int s = 0;
        for (auto x : e) s += static_cast<int>(x);
        out.lower = round_down(scalar_abs_lower(c) * std::pow(q.rate, s));
        break;
      }
      // Torus sampling: 64 phases per variable, at most 4096 points.
      int nvars = f.nvars();
      int phases = 64;
      while (std::pow(static_cast<double>(phases), nvars) > 4096.0 && phases > 1)
        phases /= 2;
      std::vector<int> idx(nvars, 0);
      double best = 0.0;
      bool done = false;
      while (!done) {
        std::vector<std::complex<double>> z(nvars);
        for (int i = 0; i < nvars; ++i) {
          double th = 2.0 * M_PI * idx[i] / phases;
          z[i] = std::polar(q.rate, th);
        }
        best = std::max(best, round_down(std::abs(eval_complex(f, z))));
        done = true;
        for (int i = 0; i < nvars; ++i) {
          if (++idx[i] < phases) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
      }
      out.lower = best;
      break;
    }
    case BaseKind::ExpWeighted: {
      out.upper = exp_weighted_sup_upper(radial_majorant(abs_poly(f)), q.rate);
      out.lower = exp_weighted_lower(f, q.rate);
      break;
    }
    case BaseKind::DerivSum: {
      auto [dn, up] = deriv_sum_bracket(f, q.rate);
      out.lower = dn;
      out.upper = up;
      break;
    }
  }
  if (out.lower > out.upper) out.lower = out.upper;  // rounding slack only
  return out;
}

double base_linear_upper(const BaseSeminorm& q, const Poly& f) {
  return linear_upper_abs(q, abs_poly(f));
}

namespace {

double cheap_upper(const BaseSeminorm& q, const Poly& g) {
  switch (q.kind) {
    case BaseKind::PolydiskSup:
      return polydisk_upper_abs(abs_poly(g), q.rate);
    case BaseKind::ExpWeighted:
      return exp_weighted_sup_upper(radial_majorant(abs_poly(g)), q.rate);
    case BaseKind::DerivSum:
      return deriv_sum_bracket(g, q.rate).second;
  }
  return kInf;
}

}  // namespace

std::vector<SeminormEnclosure> sup_unit_ball_ladder(const Representation& rep,
                                                    const Poly& f,
                                                    const BaseSeminorm& q,
                                                    int n_max,
                                                    int word_budget) {
  struct Node {
    Poly g;
    double scale;  // product of 1/||e_j|| factors putting the word in the ball
    double ucap;   // product of coefficient caps weighting the upper sum
    double proxy;
  };
  auto proxy_of = [](const Poly& g, double scale) {
    double acc = 0.0;
    for (const auto& [e, c] : g.terms()) acc += scalar_abs_lower(c);
    return acc * scale;
  };

  int d = rep.spec()->dim();
  std::vector<double> caps = coefficient_caps_up(*rep.spec());
  std::vector<std::vector<AbsOpTerm>> gens(d);
  for (int j = 0; j < d; ++j)
    for (const auto& t : rep.generator_terms(j))
      gens[j].push_back({round_up(caps[j] * scalar_abs_upper(t.coeff)), t.mono,
                         t.dvar});

  std::vector<SeminormEnclosure> out;
  out.push_back(base_eval(q, f));

  std::vector<Node> nodes{{f, 1.0, 1.0, proxy_of(f, 1.0)}};
  bool enumerating = true;
  AbsPoly B;
  const std::size_t beam_width = 32;

  for (int n = 1; n <= n_max; ++n) {
    SeminormEnclosure level;
    level.K = n;
    if (enumerating &&
        nodes.size() * static_cast<std::size_t>(d) >
            static_cast<std::size_t>(word_budget)) {
      // Budget exhausted: collapse the enumerated level into a single
      // absolute-coefficient majorant; the beam survivors keep feeding
      // the lower bound.
      enumerating = false;
      B.clear();
      for (const auto& node : nodes)
        for (const auto& [e, c] : node.g.terms()) {
          double add = round_up(node.ucap * scalar_abs_upper(c));
          auto [it, inserted] = B.emplace(e, add);
          if (!inserted) it->second = round_up(it->second + add);
        }
      std::stable_sort(nodes.begin(), nodes.end(),
                       [](const Node& a, const Node& b) { return a.proxy > b.proxy; });
      if (nodes.size() > beam_width) nodes.resize(beam_width);
    }

    if (enumerating) {
      std::vector<Node> next;
      next.reserve(nodes.size() * d);
      double upper = 0.0;
      for (const auto& node : nodes)
        for (int j = 0; j < d; ++j) {
          Node nn{rep.act_generator(j, node.g),
                  node.scale * basis_scale_down(rep, j),
                  round_up(node.ucap * caps[j]), 0.0};
          if (nn.g.is_zero()) continue;
          nn.proxy = proxy_of(nn.g, nn.scale);
          upper = round_up(upper + round_up(nn.ucap * cheap_upper(q, nn.g)));
          next.push_back(std::move(nn));
        }
      level.upper = upper;
      std::vector<const Node*> ranked;
      for (const auto& nn : next) ranked.push_back(&nn);
      std::stable_sort(ranked.begin(), ranked.end(), [](const Node* a, const Node* b) {
        return a->proxy > b->proxy;
      });
      double lower = 0.0;
      for (std::size_t i = 0; i < ranked.size() && i < 8; ++i)
        lower = std::max(lower, round_down(base_eval(q, ranked[i]->g).lower *
                                           ranked[i]->scale));
      level.lower = lower;
      nodes = std::move(next);
    } else {
      B = apply_abs_ops(gens, B, rep.nvars());
      level.upper = linear_upper_abs(q, B);
      // Beam step for the lower bound.
      std::vector<Node> next;
      next.reserve(nodes.size() * d);
      for (const auto& node : nodes)
        for (int j = 0; j < d; ++j) {
          Node nn{rep.act_generator(j, node.g),
                  node.scale * basis_scale_down(rep, j), 1.0, 0.0};
          if (nn.g.is_zero()) continue;
          nn.proxy = proxy_of(nn.g, nn.scale);
          next.push_back(std::move(nn));
        }
      std::stable_sort(next.begin(), next.end(),
                       [](const Node& a, const Node& b) { return a.proxy > b.proxy; });
      if (next.size() > beam_width) next.resize(beam_width);
      double lower = 0.0;
      for (std::size_t i = 0; i < next.size() && i < 8; ++i)
        lower = std::max(
            lower, round_down(base_eval(q, next[i].g).lower * next[i].scale));
      level.lower = lower;
      nodes = std::move(next);
    }
    if (level.lower > level.upper) level.lower = level.upper;
    out.push_back(level);
  }
  return out;
}

SeminormEnclosure sup_unit_ball_bracket(const Representation& rep, int n,
                                        const Poly& f, const BaseSeminorm& q,
                                        int word_budget) {
  return sup_unit_ball_ladder(rep, f, q, n, word_budget).back();
}

SeminormEnclosure analytic_seminorm(const Representation& rep, const Poly& f,
                                    const AnalyticQuery& query,
                                    std::vector<PartialSumRow>* rows) {
  if (query.R < 0)
    throw Error(ErrorCode::InvalidInput, "negative Gevrey order rejected");
  if (query.r < 0)
    throw Error(ErrorCode::InvalidInput, "radius must be nonnegative");

  SeminormEnclosure out;
  out.K = query.K;
  if (query.r == 0.0) {
    SeminormEnclosure b = base_eval(query.q, f);
    out.lower = b.lower;
    out.upper = b.upper;
    out.tail_certified = true;
    if (rows) rows->push_back({0, b.lower, b.upper, b.lower, b.upper});
    return out;
  }

  std::vector<SeminormEnclosure> ladder =
      sup_unit_ball_ladder(rep, f, query.q, query.K, query.word_budget);
  std::vector<double> term_uppers;
  double cum_lo = 0.0, cum_up = 0.0;
  for (int n = 0; n <= query.K; ++n) {
    const SeminormEnclosure& t = ladder[n];
    double lw = std::lgamma(n + 1.0) * (query.R - 1.0) + n * std::log(query.r);
    double w_up = round_up(std::exp(lw));
    double w_lo = round_down(std::exp(lw));
    double tu = round_up(w_up * t.upper);
    double tl = round_down(w_lo * t.lower);
    term_uppers.push_back(tu);
    cum_up = round_up(cum_up + tu);
    cum_lo = round_down(cum_lo + tl);
    if (rows) rows->push_back({n, tl, tu, cum_lo, cum_up});
  }
  out.lower = cum_lo;

  // Geometric tail certificate from the last J = 4 upper-term ratios.
  const int J = 4;
  const double rho_star = 0.9;
  bool all_zero = true;
  for (int i = 0; i < J && i < static_cast<int>(term_uppers.size()); ++i)
    if (term_uppers[term_uppers.size() - 1 - i] != 0.0) all_zero = false;
  if (all_zero) {
    out.upper = cum_up;
    out.tail_certified = true;
    out.ratio = 0.0;
    return out;
  }
  bool ok = static_cast<int>(term_uppers.size()) > J;
  double rho_hat = 0.0;
  for (int i = 0; ok && i < J; ++i) {
    double cur = term_uppers[term_uppers.size() - 1 - i];
    double prev = term_uppers[term_uppers.size() - 2 - i];
    if (prev == 0.0) {
      if (cur != 0.0) ok = false;
      continue;
    }
    double ratio = round_up(cur / prev);
    if (ratio > rho_star) ok = false;
    rho_hat = std::max(rho_hat, ratio);
  }
  if (ok) {
    double last = term_uppers.back();
    out.upper = round_up(cum_up + round_up(last * rho_hat / (1.0 - rho_hat)));
    out.tail_certified = true;
    out.ratio = rho_hat;
  } else {
    out.upper = kInf;
    out.tail_certified = false;
  }
  return out;
}

std::string partial_sums_csv(const std::vector<PartialSumRow>& rows) {
  std::ostringstream os;
  os << "n,term_lower,term_upper,cumsum_lower,cumsum_upper\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.n << "," << r.term_lower << "," << r.term_upper << ","
       << r.cum_lower << "," << r.cum_upper << "\n";
  return os.str();
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::CertifiedMember: return "CertifiedMember";
    case Membership::CertifiedNonMember: return "CertifiedNonMember";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

MembershipResult membership_verdict(const Representation& rep, const Poly& f,
                                    double R, double r0,
                                    const AnalyticQuery& query) {
  MembershipResult out;
  if (f.is_zero()) {
    out.verdict = Membership::CertifiedMember;
    out.evidence = "zero vector";
    return out;
  }
  AnalyticQuery probe = query;
  probe.R = R;
  probe.r = 0.99 * r0;
  SeminormEnclosure e = analytic_seminorm(rep, f, probe);
  if (e.tail_certified && e.finite()) {
    out.verdict = Membership::CertifiedMember;
    std::ostringstream os;
    os << "finite certified enclosure at r = " << probe.r
       << " (monotone in r below that): " << e.json();
    out.evidence = os.str();
    return out;
  }

  if (R >= 1.0) {
    // Eigenvector divergence: a basis generator with rho(e_i) f = lambda f
    // and ||e_i||/|lambda| < r0 rules membership out.
    for (int i = 0; i < rep.spec()->dim(); ++i) {
      Poly g = rep.act_generator(i, f);
      if (g.is_zero()) continue;
      const auto& lead = *f.terms().rbegin();
      auto it = g.terms().find(lead.first);
      if (it == g.terms().end()) continue;
      Scalar lambda = it->second / lead.second;
      if (!(g == f * lambda)) continue;
      double r_threshold =
          round_up(round_up(rep.spec()->basis_norm(i)) / scalar_abs_lower(lambda));
      if (r_threshold >= r0) continue;
      double r = 0.5 * (r_threshold + r0);
      DivergenceWitness w = divergence_witness(rep, f, LieElement::basis(rep.spec()->dim(), i),
                                               lambda, r, query.q);
      if (w.success) {
        out.verdict = Membership::CertifiedNonMember;
        std::ostringstream os;
        os << "eigenvector " << rep.spec()->basis_labels()[i]
           << " with divergence ratio " << w.ratio << " at r = " << r << " < r0";
        out.evidence = os.str();
        return out;
      }
    }
  }
  out.verdict = Membership::Unknown;
  out.evidence = "no tail certificate and no divergence witness";
  return out;
}

DivergenceWitness divergence_witness(const Representation& rep, const Poly& f,
                                     const LieElement& xi, const Scalar& lambda,
                                     double r, const BaseSeminorm& q,
                                     double target) {
  Poly acted(rep.nvars());
  for (int i = 0; i < rep.spec()->dim(); ++i) {
    if (xi.coords[i].is_zero()) continue;
    acted += rep.act_generator(i, f) * xi.coords[i];
  }
  if (!(acted == f * lambda))
    throw Error(ErrorCode::NotAnEigenvector,
                "rho(xi) f != lambda f, no divergence witness available");

  DivergenceWitness out;
  double q_lo = base_eval(q, f).lower;
  out.base_value = q_lo;
  if (q_lo <= 0.0) {
    out.note = "base seminorm lower bound vanishes; witness inconclusive";
    return out;
  }
  double norm_up = round_up(rep.spec()->element_norm_upper(xi));
  out.ratio = round_down(r * scalar_abs_lower(lambda) / norm_up);
  if (out.ratio < 1.0) {
    out.note = "ratio below 1: geometric series converges, nothing shown";
    return out;
  }
  out.success = true;
  double sum = 0.0, pow = 1.0;
  for (int n = 0; n < 100000; ++n) {
    sum = round_down(sum + pow);
    if (sum > target) {
      out.terms_to_exceed = n + 1;
      break;
    }
    pow = round_down(pow * out.ratio);
  }
  out.note = "partial sums q(f) * sum ratio^n exceed " + std::to_string(target) +
             " * q(f) after " + std::to_string(out.terms_to_exceed) + " terms";
  return out;
}

}  // namespace udeform
