#include <doctest.h>

#include <udeform/errors.hpp>
#include <udeform/representation.hpp>
#include <udeform/uea.hpp>

using namespace udeform;

TEST_CASE("ax+b action on one variable") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  Poly z = Poly::parse("z", 1);
  Poly z3 = Poly::parse("z^3", 1);

  CHECK(rep.act_generator(0, z3) == Poly::parse("3*z^2", 1));   // E = d/dz
  CHECK(rep.act_generator(1, z3) == Poly::parse("-3*z^3", 1));  // H = -z d/dz

  // words compose right to left
  CHECK(rep.act_word({0, 1}, z3) == Poly::parse("-9*z^2", 1));
  CHECK(rep.act_word({1, 0}, z3) == Poly::parse("-6*z^2", 1));

  UEAContext ctx(axb);
  UEAElement h = UEAElement::generator(axb, 1);
  // H(H+1) kills z: H z = -z, (H+1) z = 0
  CHECK(rep.act_uea(ctx.pochhammer_rising(h, Scalar(0), 2), z).is_zero());
}

TEST_CASE("uea action factors through normal ordering") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  UEAContext ctx(axb);
  Poly f = Poly::parse("z^4 + 2*z", 1);
  // rho(H)rho(E) f must equal rho(EH + E) f
  Poly lhs = rep.act_word({1, 0}, f);
  Poly rhs = rep.act_uea(ctx.normal_order_word({1, 0}), f);
  CHECK(lhs == rhs);
}

TEST_CASE("triangular action commutators match the brackets") {
  for (int d : {3, 4}) {
    SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:" + std::to_string(d));
    // create() probes [rho(e_i), rho(e_j)] = rho([e_i, e_j]) and throws on
    // mismatch, so construction succeeding is the assertion.
    Representation rep = Representation::heis_sl(sl, d);
    CHECK(rep.nvars() == d);
    CHECK(rep.check_malleability(4).ok);
  }
}

TEST_CASE("abelian generators are the coordinate derivatives") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
  Representation rep = Representation::abelian(ab);
  Poly f = Poly::parse("z1^2*z2", 2);
  CHECK(rep.act_generator(0, f) == Poly::parse("2*z1*z2", 2));
  CHECK(rep.act_generator(1, f) == Poly::parse("z1^2", 2));
}

TEST_CASE("multiplication operators fail the malleability probe") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:1");
  std::vector<std::vector<OperatorTerm>> gens(1);
  gens[0].push_back({Scalar(1), Exponents{1}, -1});  // f -> z * f
  Representation rep = Representation::create(ab, 1, gens);
  MalleabilityReport m = rep.check_malleability(3);
  CHECK_FALSE(m.ok);
  CHECK_FALSE(m.witness.empty());
}

TEST_CASE("a wrong-sign generator is rejected at construction") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  std::vector<std::vector<OperatorTerm>> gens(2);
  gens[0].push_back({Scalar(1), Exponents{0}, 0});  // E = d/dz
  gens[1].push_back({Scalar(1), Exponents{1}, 0});  // +z d/dz: flips [H,E]
  CHECK_THROWS_AS(Representation::create(axb, 1, gens), Error);
}
