#include <doctest.h>

#include <udeform/estimates.hpp>
#include <udeform/representation.hpp>
#include <udeform/twist.hpp>

using namespace udeform;

TEST_CASE("cauchy rows pass and stay certified on a small probe") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  Poly v = Poly::parse("z^2", 1);
  for (double R : {0.5, 1.0}) {
    EstimateReport rep1 =
        cauchy_check(rep, v, R, 1.0 / 12.0, {0, 1}, 16, BaseSeminorm::polydisk(1.0));
    CHECK(rep1.pass());
    CHECK(rep1.unknown_count() == 0);
  }
}

TEST_CASE("empty-word cauchy row reduces to weight domination") {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
  Representation rep = Representation::heis_sl(sl, 3);
  // with loose sup enclosures only the shared-series argument can close
  // the near-equality comparison at n = 0
  EstimateReport r = cauchy_check(rep, Poly::parse("z3", 3), 0.5, 0.125, {},
                                  16, BaseSeminorm::polydisk(1.0));
  CHECK(r.pass());
  CHECK(r.unknown_count() == 0);
}

TEST_CASE("malleable continuity on the abelian model") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
  Representation rep = Representation::abelian(ab);
  // |1+z1| and |1-z1| peak on opposite sides of the disk, so the product
  // bound has real slack for the interval comparison to certify
  Poly v = Poly::parse("1 + z1", 2);
  Poly w = Poly::parse("1 - z1", 2);
  EstimateReport r =
      malleable_continuity_check(rep, v, w, 0.5, 0.1, 16, BaseSeminorm::polydisk(1.0));
  CHECK(r.pass());
  CHECK(r.unknown_count() == 0);
}

TEST_CASE("equicontinuity margins and fault injection") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
  UEAContext ctx(ab);
  LieElement e1 = LieElement::basis(2, 0);
  LieElement e2 = LieElement::basis(2, 1);
  TwistFamilyConfig cfg = TwistFamilyConfig::abelian(ab, {{e1, e2}});
  TwistSeries F = generate_twist(ctx, cfg, 6);
  Representation rep = Representation::abelian(ab);
  EquicontinuityConstants consts =
      EquicontinuityConstants::abelian(cfg.abelian_constant(), 1.0, 1, 1.0, 1.0);
  // v, w chosen so F_n = e1^n (x) e2^n acts without annihilating a leg
  Poly v = Poly::parse("z1", 2);
  Poly w = Poly::parse("z2", 2);
  BaseSeminorm q = BaseSeminorm::polydisk(1.0);
  double r = consts.r0 / 2.0;

  EstimateReport good = equicontinuity_check(consts, F, rep, v, w, r, 6, 16, q);
  CHECK(good.pass());
  for (const auto& row : good.rows)
    if (row.verdict == RowVerdict::Pass) CHECK(row.margin >= 1.0 - 1e-9);

  // scaling the left side by 1000 must flip at least one row; this keeps
  // the comparison honest (it is falsifiable)
  EstimateReport bad =
      equicontinuity_check(consts, F, rep, v, w, r, 6, 16, q, 1000.0);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("order-zero entire bound") {
  for (int d : {1, 3}) {
    Poly f = d == 1 ? Poly::parse("1 + z + z^3", 1)
                    : Poly::parse("z1*z2 + z3", 3);
    EstimateReport r = entire_order0_bound_check(d, f, 0.5, 0.25);
    CHECK(r.pass());
    CHECK(r.unknown_count() == 0);
  }
}

TEST_CASE("inclusion inequalities on the half-line model") {
  for (double r0 : {0.5, 1.0}) {
    EstimateReport r =
        axb_inclusion_checks(Poly::parse("z^2 + z^5", 1), r0, 0.25);
    CHECK(r.pass());
    CHECK(r.unknown_count() == 0);
  }
  CHECK_THROWS(axb_inclusion_checks(Poly::parse("z", 1), 2.0, 0.25));
}

TEST_CASE("report serialization carries verdicts") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  EstimateReport r = cauchy_check(rep, Poly::parse("z", 1), 1.0, 0.125, {0},
                                  8, BaseSeminorm::polydisk(1.0));
  std::string j = r.json();
  CHECK(j.find("\"verdict\"") != std::string::npos);
  std::string csv = r.csv();
  CHECK(csv.rfind("params,", 0) == 0);
}
