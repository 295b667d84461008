#include <doctest.h>

#include <udeform/representation.hpp>
#include <udeform/rng.hpp>
#include <udeform/star.hpp>
#include <udeform/twist.hpp>

using namespace udeform;

namespace {

struct AxbFixture {
  SpecPtr spec = LieAlgebraSpec::builtin("axb");
  UEAContext ctx{spec};
  TwistSeries F;
  Representation rep = Representation::axb(spec);
  explicit AxbFixture(int order = 8)
      : F(generate_twist(ctx, TwistFamilyConfig::axb(spec), order)) {}
};

const Scalar kHbar = Scalar(mpq_class(3, 7), mpq_class(1, 5));

}  // namespace

TEST_CASE("z * z = z^2 - hbar^2") {
  AxbFixture fx;
  Poly z = Poly::parse("z", 1);
  auto coeffs = hbar_coefficients(fx.ctx, fx.F, fx.rep, z, z);
  REQUIRE(coeffs.size() >= 3);
  CHECK(coeffs[0] == Poly::parse("z^2", 1));
  CHECK(coeffs[1].is_zero());
  CHECK(coeffs[2] == Poly::parse("-1", 1));
  for (std::size_t n = 3; n < coeffs.size(); ++n) CHECK(coeffs[n].is_zero());

  CHECK(star_eval(fx.ctx, fx.F, fx.rep, z, z, Scalar::rational(3, 7)) ==
        Poly::parse("z^2 - 9/49", 1));
}

TEST_CASE("abelian single-pair twist gives x * y - y * x = hbar") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
  UEAContext ctx(ab);
  LieElement e1 = LieElement::basis(2, 0);
  LieElement e2 = LieElement::basis(2, 1);
  TwistSeries F =
      generate_twist(ctx, TwistFamilyConfig::abelian(ab, {{e1, e2}}), 4);
  Representation rep = Representation::abelian(ab);
  Poly x = Poly::parse("z1", 2), y = Poly::parse("z2", 2);
  auto fwd = hbar_coefficients(ctx, F, rep, x, y);
  auto bwd = hbar_coefficients(ctx, F, rep, y, x);
  auto at = [](const std::vector<Poly>& v, std::size_t n) {
    return n < v.size() ? v[n] : Poly(2);  // trailing zeros are trimmed
  };
  CHECK((at(fwd, 0) - at(bwd, 0)).is_zero());
  CHECK(at(fwd, 1) - at(bwd, 1) == Poly::parse("1", 2));
}

TEST_CASE("one is a star unit and hbar = 0 recovers the product") {
  AxbFixture fx;
  Poly one = Poly::parse("1", 1);
  Poly f = Poly::parse("2 + z^3 - (1/2)*z^5", 1);
  Poly g = Poly::parse("z^2 + (2-i)*z", 1);
  CHECK(star_eval(fx.ctx, fx.F, fx.rep, one, f, kHbar) == f);
  CHECK(star_eval(fx.ctx, fx.F, fx.rep, f, one, kHbar) == f);
  CHECK(star_eval(fx.ctx, fx.F, fx.rep, f, g, Scalar(0)) == f * g);
}

TEST_CASE("associativity residual vanishes on seeded triples") {
  AxbFixture fx(10);
  SplitMix64 rng(99);
  for (int j = 0; j < 5; ++j) {
    Poly a = rng.poly(10 * j + 1, 1, 3);
    Poly b = rng.poly(10 * j + 2, 1, 3);
    Poly c = rng.poly(10 * j + 3, 1, 3);
    CHECK(assoc_residual(fx.ctx, fx.F, fx.rep, a, b, c, kHbar).is_zero());
  }
}

TEST_CASE("star term list terminates with a certificate") {
  AxbFixture fx;
  Poly a = Poly::parse("z^2", 1), b = Poly::parse("z^3", 1);
  StarTermList terms = star_terms(fx.ctx, fx.F, fx.rep, a, b);
  CHECK(terms.certified);
  CHECK_FALSE(terms.certificate.empty());
  CHECK(terms.structural_bound == 5);  // deg a + deg b
  CHECK(static_cast<int>(terms.T.size()) <= terms.structural_bound + 1);
  CHECK_FALSE(terms.T.empty());
  CHECK_FALSE(terms.T.back().is_zero());
}

TEST_CASE("first-order antisymmetrization matches the closed formula") {
  for (int d : {3, 4}) {
    SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:" + std::to_string(d));
    UEAContext ctx(sl);
    TwistFamilyConfig cfg = TwistFamilyConfig::heis_sl(sl, d);
    TwistSeries F = generate_twist(ctx, cfg, 1);
    Representation rep = Representation::heis_sl(sl, d);
    SplitMix64 rng(5);
    for (int j = 0; j < 4; ++j) {
      Poly f = rng.poly(20 * d + 2 * j, d, 2);
      Poly g = rng.poly(20 * d + 2 * j + 1, d, 2);
      CHECK(poisson_bracket(F, rep, f, g) ==
            poisson_formula_sl(f, g, d, cfg.c_s));
    }
  }
}

TEST_CASE("bracket of first and last variable, d = 3") {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
  UEAContext ctx(sl);
  TwistFamilyConfig cfg = TwistFamilyConfig::heis_sl(sl, 3);
  TwistSeries F = generate_twist(ctx, cfg, 1);
  Representation rep = Representation::heis_sl(sl, 3);
  Poly z1 = Poly::parse("z1", 3), z3 = Poly::parse("z3", 3);
  CHECK(poisson_bracket(F, rep, z1, z3) == Poly::parse("(1/2)*z1^2", 3));
  CHECK(poisson_bracket(F, rep, z1, Poly::parse("z2", 3)).is_zero());
}

TEST_CASE("star evaluation needs an exact hbar") {
  AxbFixture fx;
  Poly z = Poly::parse("z", 1);
  Scalar fh = Scalar::parse("0.25", ScalarMode::Float);
  CHECK_THROWS(star_eval(fx.ctx, fx.F, fx.rep, z, z, fh));
}
