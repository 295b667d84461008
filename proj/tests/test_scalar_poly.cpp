#include <doctest.h>

#include <udeform/errors.hpp>
#include <udeform/poly.hpp>
#include <udeform/scalar.hpp>

using namespace udeform;

TEST_CASE("exact scalar arithmetic is rational complex") {
  Scalar a = Scalar::rational(3, 7);
  Scalar b = Scalar::gaussian(0, 1, 1, 5);
  Scalar h = a + b;
  CHECK(h.re() == mpq_class(3, 7));
  CHECK(h.im() == mpq_class(1, 5));
  CHECK((h * h).re() == mpq_class(3, 7) * mpq_class(3, 7) -
                            mpq_class(1, 5) * mpq_class(1, 5));
  CHECK(h / h == Scalar(1));
  CHECK(h - h == Scalar(0));
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("2") == Scalar(2));
  CHECK(Scalar::parse("-5/9") == Scalar::rational(-5, 9));
  CHECK(Scalar::parse("3/7 + 1/5i") ==
        Scalar(mpq_class(3, 7), mpq_class(1, 5)));
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("1 - i") == Scalar(mpq_class(1), mpq_class(-1)));
  CHECK_THROWS_AS(Scalar::parse("frog"), Error);
}

TEST_CASE("mixing exact and float scalars is rejected") {
  Scalar e(2);
  Scalar f = Scalar::parse("0.5", ScalarMode::Float);
  CHECK_THROWS_AS(e + f, Error);
}

TEST_CASE("polynomial product and degree") {
  Poly f = Poly::parse("1 + z", 1);
  Poly g = Poly::parse("1 - z", 1);
  CHECK(f * g == Poly::parse("1 - z^2", 1));
  CHECK((f * g).degree() == 2);
  CHECK(Poly::parse("0", 1).is_zero());
}

TEST_CASE("malformed polynomials are rejected") {
  CHECK_THROWS_AS(Poly::parse("+++z", 1), Error);
  CHECK_THROWS_AS(Poly::parse("z +", 1), Error);
  CHECK_THROWS_AS(Poly::parse("(1/2*z", 1), Error);
  CHECK_THROWS_AS(Poly::parse("z9", 1), Error);
}

TEST_CASE("polynomial parse round-trips through str") {
  for (const char* s : {"z1^2 + z2", "(3/4)*z1*z2^3", "1 + z1 + z1*z2",
                        "(2+3i)*z2^5"}) {
    Poly f = Poly::parse(s, 2);
    CHECK(Poly::parse(f.str(), 2) == f);
  }
}

TEST_CASE("polynomial json round-trip") {
  Poly f = Poly::parse("(1/3)*z1^2*z2 + (2-1/2i)*z2^4", 2);
  CHECK(Poly::from_json(f.json()) == f);
}

TEST_CASE("derivative and evaluation") {
  Poly f = Poly::parse("z1^3*z2", 2);
  CHECK(f.derivative(0) == Poly::parse("3*z1^2*z2", 2));
  CHECK(f.derivative(1) == Poly::parse("z1^3", 2));
  CHECK(f.eval({Scalar(2), Scalar(3)}) == Scalar(24));
}

TEST_CASE("graded-lex term order puts lower total degree first") {
  Poly f = Poly::parse("z1^2 + z2 + 1", 2);
  int prev = -1;
  for (const auto& [e, c] : f.terms()) {
    int deg = 0;
    for (auto k : e) deg += static_cast<int>(k);
    CHECK(deg >= prev);
    prev = deg;
  }
}
