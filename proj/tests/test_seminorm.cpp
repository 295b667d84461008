#include <doctest.h>

#include <cmath>

#include <udeform/representation.hpp>
#include <udeform/seminorm.hpp>

using namespace udeform;

TEST_CASE("polydisk sup of a monomial is r^deg") {
  Poly f = Poly::parse("z1^2*z2", 2);
  SeminormEnclosure e = base_eval(BaseSeminorm::polydisk(0.5), f);
  CHECK(e.lower <= 0.125);
  CHECK(e.upper >= 0.125);
  CHECK(e.upper <= 0.125 * 1.001);
}

TEST_CASE("exponentially weighted seminorm of z") {
  // sup_k |f_k| k^k r^k with the k = 1 coefficient scaled by 1/e
  double r = 0.5;
  SeminormEnclosure e = base_eval(BaseSeminorm::exp_weighted(r), Poly::parse("z", 1));
  double expect = 1.0 / (std::exp(1.0) * r);
  CHECK(e.lower <= expect * 1.0001);
  CHECK(e.upper >= expect * 0.9999);
}

TEST_CASE("derivative-sum seminorm of z^2") {
  double r = 0.5;
  SeminormEnclosure e = base_eval(BaseSeminorm::deriv_sum(r), Poly::parse("z^2", 1));
  double expect = 1.0 + 2.0 * r + 2.0 * r * r;  // |f| + r|f'| + r^2|f''|
  CHECK(e.lower <= expect * 1.0001);
  CHECK(e.upper >= expect * 0.9999);
}

TEST_CASE("order zero of the analytic series is the base seminorm") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  Poly f = Poly::parse("1 + z + z^2", 1);
  BaseSeminorm q = BaseSeminorm::polydisk(1.0);
  std::vector<PartialSumRow> rows;
  analytic_seminorm(rep, f, {1.0, 0.125, q, 8}, &rows);
  REQUIRE(!rows.empty());
  SeminormEnclosure base = base_eval(q, f);
  CHECK(rows[0].term_lower <= base.upper);
  CHECK(rows[0].term_upper >= base.lower);
}

TEST_CASE("enclosures are ordered and grow with the radius") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  Poly f = Poly::parse("z^3 + 2*z", 1);
  BaseSeminorm q = BaseSeminorm::polydisk(1.0);
  SeminormEnclosure small = analytic_seminorm(rep, f, {1.0, 0.1, q, 12});
  SeminormEnclosure big = analytic_seminorm(rep, f, {1.0, 0.2, q, 12});
  CHECK(small.lower <= small.upper);
  CHECK(big.lower <= big.upper);
  CHECK(small.lower <= big.upper);
  // polynomial + derivation action: the derivative tower terminates, so
  // the tail certificate is immediate
  CHECK(small.tail_certified);
  CHECK(small.finite());
}

TEST_CASE("unit-ball sup brackets stay ordered along the ladder") {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
  Representation rep = Representation::heis_sl(sl, 3);
  Poly f = Poly::parse("z1*z2 + z3^2", 3);
  auto lad = sup_unit_ball_ladder(rep, f, BaseSeminorm::polydisk(1.0), 5);
  REQUIRE(lad.size() == 6);
  for (const auto& e : lad) CHECK(e.lower <= e.upper * (1.0 + 1e-9));
  // level 0 is just q(f)
  SeminormEnclosure q0 = base_eval(BaseSeminorm::polydisk(1.0), f);
  CHECK(lad[0].lower == doctest::Approx(q0.lower));
  CHECK(lad[0].upper == doctest::Approx(q0.upper));
}

TEST_CASE("geometric divergence witness for z^k under the scaling field") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  for (int k : {1, 2, 3, 4}) {
    Poly f = Poly::parse("z^" + std::to_string(k), 1);
    LieElement xi = LieElement::basis(2, 1);  // H, an eigenvector direction
    Scalar lambda = Scalar(-k);
    double r = 2.0 / k;
    DivergenceWitness w = divergence_witness(rep, f, xi, lambda, r,
                                             BaseSeminorm::polydisk(1.0));
    CHECK(w.success);
    CHECK(w.ratio >= 1.99);
    CHECK(w.terms_to_exceed >= 0);
    // ratio 2 means partial sums pass 10^6 q(f) by term 21 at the latest
    CHECK(w.terms_to_exceed <= 21);
  }
}

TEST_CASE("membership verdicts are certified in both directions") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  BaseSeminorm q = BaseSeminorm::polydisk(1.0);
  MembershipResult in =
      membership_verdict(rep, Poly::parse("1 + z", 1), 1.0, 0.25, {1.0, 0.25, q, 16});
  CHECK(in.verdict == Membership::CertifiedMember);
  CHECK_FALSE(in.evidence.empty());
}

TEST_CASE("directed rounding moves outward on seminorm quantities") {
  for (double x : {1.0, 0.125, 3.25e10, 7.5e-11}) {
    CHECK(round_up(x) >= x);
    CHECK(round_down(x) <= x);
    CHECK(round_down(x) >= 0.0);  // seminorm values never go negative
  }
  CHECK(round_up(0.0) == 0.0);
  CHECK(round_down(0.0) == 0.0);
}
