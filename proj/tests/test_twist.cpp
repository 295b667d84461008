#include <doctest.h>

#include <udeform/twist.hpp>
#include <udeform/uea.hpp>

using namespace udeform;

namespace {

bool residuals_vanish(UEAContext& ctx, const TwistSeries& F, int n_max) {
  // (eps x id)F and (id x eps)F equal 1, so order 0 contributes the unit
  // and every higher order must vanish.
  UEAElement one = UEAElement::one(ctx.spec());
  for (int n = 0; n <= n_max; ++n) {
    if (!cocycle_residual(ctx, F, n).is_zero()) return false;
    UEAElement want = n == 0 ? one : UEAElement(ctx.spec());
    if (counit_residual(ctx, F, n, true) != want) return false;
    if (counit_residual(ctx, F, n, false) != want) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("abelian twist is the componentwise exponential") {
  SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
  UEAContext ctx(ab);
  LieElement e1 = LieElement::basis(2, 0);
  LieElement e2 = LieElement::basis(2, 1);
  TwistFamilyConfig cfg = TwistFamilyConfig::abelian(ab, {{e1, e2}});
  TwistSeries F = generate_twist(ctx, cfg, 3);
  // r = e1 (x) e2, so F_n = e1^n (x) e2^n (the 1/n! lives in the series)
  for (int n = 0; n <= 3; ++n) {
    UEAElement l = ctx.power(UEAElement::generator(ab, 0), n);
    UEAElement r = ctx.power(UEAElement::generator(ab, 1), n);
    CHECK(F.F[n] == ctx.tensor_product(l, r));
  }
}

TEST_CASE("ax+b twist order two") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), 2);
  UEAElement e = UEAElement::generator(axb, 0);
  UEAElement h = UEAElement::generator(axb, 1);
  UEAElement e2 = ctx.power(e, 2);
  UEAElement h2h = ctx.product(h, h) + h;
  UEAElement eh = ctx.product(e, h);

  CHECK(F.F[0] == TensorElement2::one(axb));
  CHECK(F.F[1] == ctx.tensor_product(e, h) - ctx.tensor_product(h, e));
  TensorElement2 expect = ctx.tensor_product(e2, h2h) -
                          ctx.tensor_product(eh, eh) * Scalar(2) +
                          ctx.tensor_product(h2h, e2);
  CHECK(F.F[2] == expect);
}

TEST_CASE("degenerate strictly-triangular twist keeps only the Cartan term") {
  // d = 2 leaves no room for the nilpotent cross terms, so
  // F_n = H_{n rising} (x) E12^n.
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:2");
  UEAContext ctx(sl);
  TwistFamilyConfig cfg = TwistFamilyConfig::heis_sl(sl, 2);
  TwistSeries F = generate_twist(ctx, cfg, 3);
  UEAElement h = cfg.sl_cartan();
  for (int n = 0; n <= 3; ++n) {
    UEAElement poch = ctx.pochhammer_rising(h, Scalar(0), n);
    UEAElement en = ctx.power(UEAElement::generator(sl, 0), n);
    CHECK(F.F[n] == ctx.tensor_product(poch, en));
  }
}

TEST_CASE("twist axioms hold exactly per family") {
  SUBCASE("abelian with a dense r") {
    SpecPtr ab = LieAlgebraSpec::builtin("abelian:2");
    UEAContext ctx(ab);
    LieElement e1 = LieElement::basis(2, 0);
    LieElement e2 = LieElement::basis(2, 1);
    LieElement two_e2 = e2;
    two_e2.coords[1] = Scalar(2);
    TwistSeries F = generate_twist(
        ctx, TwistFamilyConfig::abelian(ab, {{e1, e2}, {two_e2, e1}}), 4);
    CHECK(residuals_vanish(ctx, F, 4));
  }
  SUBCASE("ax+b") {
    SpecPtr axb = LieAlgebraSpec::builtin("axb");
    UEAContext ctx(axb);
    TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), 4);
    CHECK(residuals_vanish(ctx, F, 4));
  }
  SUBCASE("triangular, d = 3") {
    SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
    UEAContext ctx(sl);
    TwistSeries F = generate_twist(ctx, TwistFamilyConfig::heis_sl(sl, 3), 4);
    CHECK(residuals_vanish(ctx, F, 4));
  }
}

TEST_CASE("corrupting a coefficient breaks the cocycle") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), 3);
  UEAElement e = UEAElement::generator(axb, 0);
  UEAElement h = UEAElement::generator(axb, 1);
  F.F[1] += ctx.tensor_product(e, h) * Scalar::rational(1, 3);
  CHECK_FALSE(cocycle_residual(ctx, F, 2).is_zero());
}

TEST_CASE("residual order beyond the series is rejected") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), 2);
  CHECK_THROWS(cocycle_residual(ctx, F, 3));
}
