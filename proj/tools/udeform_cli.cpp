// Command-line front end: twist generation and verification, star
// products, certified seminorm enclosures, and the estimate/acceptance
// batteries. Exit codes: 0 success, 1 verification failure, 2 invalid
// input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "udeform/estimates.hpp"
#include "udeform/suite.hpp"

using namespace udeform;

namespace {

struct Fixture {
  SpecPtr spec;
  int nvars;
  TwistFamilyConfig cfg;
  Representation rep;
};

Fixture make_fixture(const std::string& family, int d) {
  if (family == "abelian") {
    if (d < 2) throw Error(ErrorCode::InvalidInput, "abelian family needs d >= 2");
    SpecPtr spec = LieAlgebraSpec::builtin("abelian:" + std::to_string(d));
    LieElement e1 = LieElement::basis(d, 0);
    LieElement e2 = LieElement::basis(d, 1);
    LieElement two_e2 = e2;
    two_e2.coords[1] = Scalar(2);
    return {spec, d,
            TwistFamilyConfig::abelian(spec, {{e1, e2}, {two_e2, e1}}),
            Representation::abelian(spec)};
  }
  if (family == "axb") {
    SpecPtr spec = LieAlgebraSpec::builtin("axb");
    return {spec, 1, TwistFamilyConfig::axb(spec), Representation::axb(spec)};
  }
  if (family == "sl") {
    if (d < 2) throw Error(ErrorCode::InvalidInput, "sl family needs d >= 2");
    SpecPtr spec = LieAlgebraSpec::builtin("heis-sl:" + std::to_string(d));
    return {spec, d, TwistFamilyConfig::heis_sl(spec, d),
            Representation::heis_sl(spec, d)};
  }
  throw Error(ErrorCode::InvalidInput, "unknown family: " + family);
}

BaseSeminorm make_base(const std::string& kind, double rate) {
  if (kind == "polydisk") return BaseSeminorm::polydisk(rate);
  if (kind == "exp-weighted") return BaseSeminorm::exp_weighted(rate);
  if (kind == "deriv-sum") return BaseSeminorm::deriv_sum(rate);
  throw Error(ErrorCode::InvalidInput, "unknown base seminorm: " + kind);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw Error(ErrorCode::InvalidInput, "cannot open " + out_path);
  os << text << "\n";
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) word.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) word.push_back(std::stoi(cur));
  return word;
}

int report_exit(const EstimateReport& report, bool strict) {
  if (!report.pass()) return 1;
  if (strict && report.unknown_count() > 0) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symbolic-numeric toolkit for Drinfeld twists, star products and "
      "certified seminorm estimates on polynomial representation spaces"};
  app.require_subcommand(1);

  std::string family = "axb", out_path, mode = "exact";
  int d = 3, order = 4, K = 16;
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  // --- twist ---
  auto* twist = app.add_subcommand("twist", "Generate or verify twist series");
  auto* tgen = twist->add_subcommand("gen", "Emit the truncated series as JSON");
  auto* tverify = twist->add_subcommand(
      "verify", "Check normalization, cocycle and counit identities order by order");
  for (auto* sc : {tgen, tverify}) {
    sc->add_option("--family", family, "abelian | axb | sl");
    sc->add_option("--d", d, "Matrix size / variable count where applicable");
    sc->add_option("--order", order, "Truncation order N");
  }

  // --- star ---
  std::string a_text, b_text, c_text = "", hbar_text = "0";
  auto* star = app.add_subcommand("star", "Deformed products");
  auto* seval = star->add_subcommand("eval", "Evaluate a * b at a fixed hbar");
  auto* sassoc = star->add_subcommand("assoc", "Associativity residual (a*b)*c - a*(b*c)");
  auto* spoisson = star->add_subcommand(
      "poisson", "First-order antisymmetrization; checked against the closed "
                 "formula for the sl family");
  auto* scoeffs = star->add_subcommand("coeffs", "hbar-coefficient list of a * b");
  for (auto* sc : {seval, sassoc, spoisson, scoeffs}) {
    sc->add_option("--family", family, "abelian | axb | sl");
    sc->add_option("--d", d, "Matrix size / variable count where applicable");
    sc->add_option("--order", order, "Twist truncation order N");
    sc->add_option("--a", a_text, "First factor, e.g. \"3/2*z1^2 - i*z2\"")->required();
    sc->add_option("--b", b_text, "Second factor")->required();
  }
  sassoc->add_option("--c", c_text, "Third factor")->required();
  seval->add_option("--hbar", hbar_text, "Exact scalar, e.g. \"3/7\" or \"3/7+1/5 i\"");
  sassoc->add_option("--hbar", hbar_text, "Exact scalar");

  // --- seminorm ---
  double R = 1.0, rr = 0.5, r0 = 0.5, rate = 1.0, lam_hint = 0.0;
  std::string f_text, base_kind = "polydisk", csv_path, word_text;
  int xi_index = 0;
  auto* sem = app.add_subcommand("seminorm", "Certified seminorm enclosures");
  auto* qeval = sem->add_subcommand("eval", "Enclose p^(R)_{r,q}(f)");
  auto* qmember = sem->add_subcommand(
      "membership", "Analytic-vector membership verdict up to radius r0");
  auto* qdiverge = sem->add_subcommand(
      "diverge", "Geometric divergence witness from an eigenvector relation");
  for (auto* sc : {qeval, qmember, qdiverge}) {
    sc->add_option("--family", family, "abelian | axb | sl");
    sc->add_option("--d", d, "Matrix size / variable count where applicable");
    sc->add_option("--f", f_text, "Polynomial")->required();
    sc->add_option("--base", base_kind, "polydisk | exp-weighted | deriv-sum");
    sc->add_option("--rate", rate, "Base seminorm radius/rate");
  }
  qeval->add_option("--R", R, "Gevrey order R");
  qeval->add_option("--r", rr, "Series radius r");
  qeval->add_option("--K", K, "Truncation order");
  qeval->add_option("--csv", csv_path, "Write per-order partial sums as CSV");
  qmember->add_option("--R", R, "Gevrey order R");
  qmember->add_option("--r0", r0, "Radius threshold");
  qmember->add_option("--K", K, "Truncation order");
  qdiverge->add_option("--xi", xi_index, "Basis index of the eigen-generator");
  qdiverge->add_option("--r", rr, "Series radius r");
  qdiverge->add_option("--lambda", lam_hint,
                       "Unused hint; the eigenvalue is read off the action");

  // --- estimate ---
  double r1 = 1.0, r2 = 1.0, big_m = 1.0, e_r0 = 0.5, e_r1 = 0.25;
  int n_max = 8;
  std::string v_text, w_text;
  bool strict = false;
  auto* est = app.add_subcommand("estimate", "Inequality verification reports");
  auto* ecauchy = est->add_subcommand(
      "cauchy", "Word-action seminorm against the doubled-radius bound");
  auto* emall = est->add_subcommand(
      "malleable", "Continuity of multiplication across the seminorm family");
  auto* eequi = est->add_subcommand(
      "equicont", "Per-order twist-term bound with the family constants");
  auto* eentire = est->add_subcommand(
      "entire0", "Order-0 seminorm against the scaled polydisk bound");
  auto* eincl = est->add_subcommand(
      "axb-inclusions", "Both one-variable inclusion inequalities");
  for (auto* sc : {ecauchy, emall, eequi}) {
    sc->add_option("--family", family, "abelian | axb | sl");
    sc->add_option("--d", d, "Matrix size / variable count where applicable");
    sc->add_option("--K", K, "Truncation order");
  }
  ecauchy->add_option("--f", f_text, "Polynomial")->required();
  ecauchy->add_option("--R", R, "Gevrey order R");
  ecauchy->add_option("--r", rr, "Series radius r");
  ecauchy->add_option("--word", word_text, "Generator word, e.g. \"0,1,0\"");
  emall->add_option("--v", v_text, "First polynomial")->required();
  emall->add_option("--w", w_text, "Second polynomial")->required();
  emall->add_option("--R", R, "Gevrey order R");
  emall->add_option("--r", rr, "Series radius r");
  eequi->add_option("--v", v_text, "First polynomial")->required();
  eequi->add_option("--w", w_text, "Second polynomial")->required();
  eequi->add_option("--r", rr, "Series radius r");
  eequi->add_option("--n-max", n_max, "Highest series order checked");
  eequi->add_option("--m", big_m, "hbar-disk radius");
  eequi->add_option("--r1", r1, "First analytic radius");
  eequi->add_option("--r2", r2, "Second analytic radius");
  eentire->add_option("--f", f_text, "Polynomial")->required();
  eentire->add_option("--d", d, "Matrix size");
  eentire->add_option("--r0", e_r0, "Polydisk radius r0");
  eentire->add_option("--r1", e_r1, "Series radius r1");
  eentire->add_option("--K", K, "Truncation order");
  eincl->add_option("--f", f_text, "Polynomial (one variable)")->required();
  eincl->add_option("--r0", e_r0, "Weight rate r0");
  eincl->add_option("--r1", e_r1, "Series radius r1");
  eincl->add_option("--K", K, "Truncation order");
  est->add_flag("--strict", strict, "Treat Unknown rows as failures");
  std::string est_csv;
  est->add_option("--csv", est_csv, "Also write the report rows as CSV");

  // --- suite ---
  std::uint64_t seed = 7;
  int threads = 1;
  auto* suite = app.add_subcommand("suite", "Run the full acceptance battery");
  suite->add_option("--seed", seed, "Battery seed");
  suite->add_option("--threads", threads, "Worker thread count");
  suite->add_flag("--strict", strict, "Treat Unknown rows as failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tgen->parsed() || tverify->parsed()) {
      Fixture fx = make_fixture(family, d);
      UEAContext ctx(fx.spec);
      TwistSeries F = generate_twist(ctx, fx.cfg, order);
      if (tgen->parsed()) {
        emit(F.json(), out_path);
        return 0;
      }
      nlohmann::ordered_json rep;
      rep["family"] = to_string(F.family);
      rep["order"] = F.order();
      bool ok = F.F[0] == TensorElement2::one(fx.spec);
      rep["normalized"] = ok;
      auto coc = nlohmann::ordered_json::array();
      auto cou = nlohmann::ordered_json::array();
      for (int n = 0; n <= order; ++n) {
        bool cz = cocycle_residual(ctx, F, n).is_zero();
        UEAElement want = n == 0 ? UEAElement::one(fx.spec) : UEAElement(fx.spec);
        bool uz = counit_residual(ctx, F, n, true) == want &&
                  counit_residual(ctx, F, n, false) == want;
        coc.push_back(cz);
        cou.push_back(uz);
        ok = ok && cz && uz;
      }
      rep["cocycle_zero"] = coc;
      rep["counit_ok"] = cou;
      rep["pass"] = ok;
      emit(rep.dump(2), out_path);
      return ok ? 0 : 1;
    }

    if (seval->parsed() || sassoc->parsed() || spoisson->parsed() ||
        scoeffs->parsed()) {
      Fixture fx = make_fixture(family, d);
      UEAContext ctx(fx.spec);
      Poly a = Poly::parse(a_text, fx.nvars);
      Poly b = Poly::parse(b_text, fx.nvars);
      bool order_given = seval->count("--order") || sassoc->count("--order") ||
                         spoisson->count("--order") || scoeffs->count("--order");
      if (!order_given) {
        // every family's term list vanishes past the combined degree, so
        // this default always certifies truncation (assoc needs the
        // intermediate products covered as well)
        int need = a.degree() + b.degree();
        if (sassoc->parsed()) need += Poly::parse(c_text, fx.nvars).degree();
        order = std::max(order, need);
      }
      TwistSeries F = generate_twist(ctx, fx.cfg, order);
      if (seval->parsed()) {
        Scalar hbar = Scalar::parse(hbar_text);
        Poly res = star_eval(ctx, F, fx.rep, a, b, hbar);
        nlohmann::ordered_json j;
        j["result"] = res.str();
        j["json"] = nlohmann::json::parse(res.json());
        emit(j.dump(2), out_path);
        return 0;
      }
      if (sassoc->parsed()) {
        Poly c = Poly::parse(c_text, fx.nvars);
        Scalar hbar = Scalar::parse(hbar_text);
        Poly res = assoc_residual(ctx, F, fx.rep, a, b, c, hbar);
        nlohmann::ordered_json j;
        j["residual"] = res.str();
        j["zero"] = res.is_zero();
        emit(j.dump(2), out_path);
        return res.is_zero() ? 0 : 1;
      }
      if (spoisson->parsed()) {
        Poly br = poisson_bracket(F, fx.rep, a, b);
        nlohmann::ordered_json j;
        j["bracket"] = br.str();
        bool ok = true;
        if (family == "sl") {
          Poly formula = poisson_formula_sl(a, b, d, fx.cfg.c_s);
          j["closed_form"] = formula.str();
          ok = br == formula;
          j["match"] = ok;
        }
        emit(j.dump(2), out_path);
        return ok ? 0 : 1;
      }
      std::vector<Poly> coeffs = hbar_coefficients(ctx, F, fx.rep, a, b);
      auto arr = nlohmann::ordered_json::array();
      for (const auto& p : coeffs) arr.push_back(p.str());
      nlohmann::ordered_json j;
      j["coefficients"] = arr;
      emit(j.dump(2), out_path);
      return 0;
    }

    if (qeval->parsed() || qmember->parsed() || qdiverge->parsed()) {
      Fixture fx = make_fixture(family, d);
      Poly f = Poly::parse(f_text, fx.nvars);
      BaseSeminorm q = make_base(base_kind, rate);
      if (qeval->parsed()) {
        std::vector<PartialSumRow> rows;
        SeminormEnclosure e =
            analytic_seminorm(fx.rep, f, {R, rr, q, K},
                              csv_path.empty() ? nullptr : &rows);
        if (!csv_path.empty()) emit(partial_sums_csv(rows), csv_path);
        emit(e.json(), out_path);
        return 0;
      }
      if (qmember->parsed()) {
        MembershipResult m = membership_verdict(fx.rep, f, R, r0, {R, 0.0, q, K});
        nlohmann::ordered_json j;
        j["verdict"] = to_string(m.verdict);
        j["evidence"] = m.evidence;
        emit(j.dump(2), out_path);
        return m.verdict == Membership::Unknown ? 1 : 0;
      }
      if (xi_index < 0 || xi_index >= fx.spec->dim())
        throw Error(ErrorCode::InvalidInput, "generator index out of range");
      Poly g = fx.rep.act_generator(xi_index, f);
      if (f.is_zero() || g.is_zero())
        throw Error(ErrorCode::NotAnEigenvector,
                    "action vanishes; no eigenvalue to witness");
      Scalar lambda = g.terms().begin()->second / f.terms().begin()->second;
      DivergenceWitness w = divergence_witness(
          fx.rep, f, LieElement::basis(fx.spec->dim(), xi_index), lambda, rr, q);
      nlohmann::ordered_json j;
      j["success"] = w.success;
      j["ratio"] = w.ratio;
      j["terms_to_exceed"] = w.terms_to_exceed;
      j["base_value"] = w.base_value;
      j["note"] = w.note;
      emit(j.dump(2), out_path);
      return w.success ? 0 : 1;
    }

    if (ecauchy->parsed() || emall->parsed() || eequi->parsed() ||
        eentire->parsed() || eincl->parsed()) {
      EstimateReport report;
      if (ecauchy->parsed()) {
        Fixture fx = make_fixture(family, d);
        report = cauchy_check(fx.rep, Poly::parse(f_text, fx.nvars), R, rr,
                              parse_word(word_text), K,
                              BaseSeminorm::polydisk(1.0));
      } else if (emall->parsed()) {
        Fixture fx = make_fixture(family, d);
        report = malleable_continuity_check(
            fx.rep, Poly::parse(v_text, fx.nvars), Poly::parse(w_text, fx.nvars),
            R, rr, K, BaseSeminorm::polydisk(1.0));
      } else if (eequi->parsed()) {
        Fixture fx = make_fixture(family, d);
        UEAContext ctx(fx.spec);
        TwistSeries F = generate_twist(ctx, fx.cfg, n_max);
        EquicontinuityConstants consts;
        if (family == "abelian") {
          consts = EquicontinuityConstants::abelian(
              fx.cfg.abelian_constant(), big_m,
              static_cast<int>(fx.cfg.r_pairs.size()), r1, r2);
        } else if (family == "axb") {
          consts = EquicontinuityConstants::axb(big_m, r1, r2);
        } else {
          LieElement two_h;
          two_h.coords.assign(fx.spec->dim(), Scalar(0));
          int h_base = fx.spec->dim() - (d - 1);
          for (int s = 0; s < d - 1; ++s)
            two_h.coords[h_base + s] = fx.cfg.c_s[s];
          consts = EquicontinuityConstants::sl(
              big_m, r1, r2, fx.spec->element_norm_upper(two_h));
        }
        report = equicontinuity_check(consts, F, fx.rep,
                                      Poly::parse(v_text, fx.nvars),
                                      Poly::parse(w_text, fx.nvars), rr, n_max,
                                      K, BaseSeminorm::polydisk(1.0));
      } else if (eentire->parsed()) {
        report = entire_order0_bound_check(d, Poly::parse(f_text, d), e_r0,
                                           e_r1, K);
      } else {
        report = axb_inclusion_checks(Poly::parse(f_text, 1), e_r0, e_r1, K);
      }
      if (!est_csv.empty()) emit(report.csv(), est_csv);
      emit(report.json(), out_path);
      return report_exit(report, strict);
    }

    if (suite->parsed()) {
      SuiteReport report = run_suite(seed, threads, strict);
      emit(report.json(), out_path);
      return report.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
