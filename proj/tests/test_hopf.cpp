#include <doctest.h>

#include <udeform/uea.hpp>

using namespace udeform;

namespace {

UEAElement gen(const SpecPtr& s, int i) { return UEAElement::generator(s, i); }

}  // namespace

TEST_CASE("normal ordering rewrites HE as EH + E") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  // basis order: index 0 = E, index 1 = H, [H,E] = E
  UEAElement he = ctx.product(gen(axb, 1), gen(axb, 0));
  UEAElement eh = ctx.product(gen(axb, 0), gen(axb, 1));
  CHECK(he == eh + gen(axb, 0));
  CHECK(ctx.normal_order_word({1, 0}) == he);
}

TEST_CASE("pochhammer annihilates below its length") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  UEAElement h = gen(axb, 1);
  // H_{2 rising} = H(H+1) = H^2 + H
  UEAElement p2 = ctx.pochhammer_rising(h, Scalar(0), 2);
  CHECK(p2 == ctx.product(h, h) + h);
  CHECK(ctx.pochhammer_rising(h, Scalar(0), 0) == UEAElement::one(axb));
}

TEST_CASE("stirling numbers expand the rising factorial") {
  // x(x+1)(x+2) = 2x + 3x^2 + x^3
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(3, 2) == 3);
  CHECK(stirling_first(3, 3) == 1);
  CHECK(stirling_first(4, 0) == 0);
}

TEST_CASE("coproduct is coassociative on PBW monomials") {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
  UEAContext ctx(sl);
  UEAElement a = ctx.product(gen(sl, 0), ctx.product(gen(sl, 3), gen(sl, 2)));
  a += gen(sl, 4) * Scalar::rational(2, 3);
  TensorElement2 d = ctx.coproduct(a);
  CHECK(ctx.coproduct_left(d) == ctx.coproduct_right(d));
}

TEST_CASE("counit laws") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  UEAElement a =
      ctx.product(gen(axb, 0), gen(axb, 1)) + UEAElement::one(axb) * Scalar(5);
  // (eps x id)Delta = id = (id x eps)Delta
  TensorElement2 d = ctx.coproduct(a);
  CHECK(ctx.counit_left(d) == a);
  CHECK(ctx.counit_right(d) == a);
  CHECK(ctx.counit(a) == Scalar(5));
}

TEST_CASE("coproduct is an algebra morphism") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  UEAElement a = ctx.product(gen(axb, 1), gen(axb, 0)) + gen(axb, 0);
  UEAElement b = ctx.product(gen(axb, 1), gen(axb, 1)) - gen(axb, 1);
  CHECK(ctx.coproduct(ctx.product(a, b)) ==
        ctx.product2(ctx.coproduct(a), ctx.coproduct(b)));
}

TEST_CASE("generators are primitive") {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:4");
  UEAContext ctx(sl);
  for (int i = 0; i < sl->dim(); ++i) {
    UEAElement g = gen(sl, i);
    TensorElement2 expect = ctx.tensor_product(g, UEAElement::one(sl)) +
                            ctx.tensor_product(UEAElement::one(sl), g);
    CHECK(ctx.coproduct(g) == expect);
  }
}

TEST_CASE("leg-wise tensor product respects noncommutativity") {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  UEAElement e = gen(axb, 0), h = gen(axb, 1);
  TensorElement2 he = ctx.tensor_product(h, e);
  TensorElement2 eh = ctx.tensor_product(e, h);
  // first legs multiply as H*E = EH + E, second as E*H (already ordered)
  TensorElement2 prod = ctx.product2(he, eh);
  TensorElement2 expect =
      ctx.tensor_product(ctx.product(h, e), ctx.product(e, h));
  CHECK(prod == expect);
}

TEST_CASE("shuffle expansion covers all splittings") {
  auto splits = leibniz_shuffle_expand(3);
  CHECK(splits.size() == 8);  // 2^3 subsets
  for (const auto& s : splits)
    CHECK(s.left.size() + s.right.size() == 3);
}
