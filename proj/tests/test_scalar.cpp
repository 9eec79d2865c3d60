#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlq/errors.hpp"
#include "tlq/field.hpp"

using namespace tlq;

TEST_CASE("polynomial arithmetic and canonical text") {
    Poly s = Poly::sigma();
    Poly p = s * s - Poly(1);            // s^2 - 1
    Poly q = s + Poly(1);                // s + 1
    Poly quo, rem;
    Poly::divrem(p, q, quo, rem);
    CHECK(rem.is_zero());
    CHECK(quo == s - Poly(1));
    CHECK(Poly::gcd(p, q) == q.monic());
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK(p.str() == "s^2-1");
    CHECK((-p).str() == "-s^2+1");
    CHECK(Poly::from_coeffs({Rational(1, 3), Rational(0), Rational(2)}).str() ==
          "2*s^2+1/3");
}

TEST_CASE("polynomial square root and squarefree split") {
    Poly s = Poly::sigma();
    Poly sq = (s * s + Poly(2) * s + Poly(1));  // (s+1)^2
    auto r = sq.sqrt_exact();
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
    CHECK_FALSE((s * s + Poly(1)).sqrt_exact().has_value());

    Poly p = (s * s - Poly(1)) * sq;  // squarefree part s^2-1, root s+1
    auto split = p.square_split();
    CHECK(split.squarefree * split.square_root * split.square_root == p);
    CHECK(split.squarefree.is_squarefree());
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
    Poly s = Poly::sigma();
    RatFunc f(s * s - Poly(1), Poly(2) * (s + Poly(1)));
    CHECK(f.den().is_monic());
    CHECK(f == RatFunc(s - Poly(1), Poly(2)));
    CHECK(f.eval(Rational(5)) == Rational(2));
    CHECK_THROWS_AS(RatFunc(Poly(1), Poly(0)), DivisionByZeroError);
    CHECK_THROWS_AS(RatFunc(Poly(1), s).eval(Rational(0)), PoleError);

    RatFunc g = RatFunc(s) / RatFunc(s * s + Poly(1));
    CHECK((g * g.inv()).is_one());
    auto root = (g * g).sqrt_exact();
    REQUIRE(root.has_value());
    CHECK(*root * *root == g * g);
}

TEST_CASE("ratfunc square split isolates the squarefree discriminant") {
    Field F = Field::ratfunc_sigma();
    // (1+q+s^2)^2 - 4q, squarefree of degree 8
    RatFunc d = F.parse("(1+q+s^2)^2 - 4*q").as_ratfunc();
    auto sp = d.square_split();
    CHECK(sp.delta.degree() == 8);
    CHECK(RatFunc(sp.delta) * sp.root * sp.root == d);
    // -4*q = (-1) * (2 s^2)^2
    auto sp2 = F.parse("-4*q").as_ratfunc().square_split();
    CHECK(sp2.delta == Poly(-1));
    CHECK(RatFunc(sp2.delta) * sp2.root * sp2.root == F.parse("-4*q").as_ratfunc());
}

TEST_CASE("element grammar") {
    Field F = Field::ratfunc_sigma();
    CHECK(F.parse("q") == F.parse("s^4"));
    CHECK(F.parse("1/(1+q) + q/(1+q)") == F.one());
    CHECK(F.parse("-s^2/(1+q)") == F.parse("(0-s^2)/(s^4+1)"));
    CHECK(F.parse("2*s^3 - s*(s^2+s)") == F.parse("s^3-s^2"));
    CHECK(F.parse("(s+1)^2").str() == "s^2+2*s+1");
    CHECK_THROWS_AS(F.parse("t"), ParseError);
    CHECK_THROWS_AS(F.parse("1+"), ParseError);
    CHECK_THROWS_AS(F.parse("th"), ParseError);  // no adjoined root here
    CHECK_THROWS_AS(F.parse("1/0"), DivisionByZeroError);
}

TEST_CASE("quadratic extension arithmetic") {
    Field F = Field::quad_ext(Poly(-1));
    FieldElement th = F.theta();
    CHECK(th * th == F.integer(-1));
    FieldElement x = F.parse("s + th*s^2");
    FieldElement y = x * x;
    CHECK(y == F.parse("s^2 - s^4 + 2*th*s^3"));
    CHECK((x / x).is_one());
    CHECK(x.inv() * x == F.one());
    CHECK_THROWS_AS(F.zero().inv(), DivisionByZeroError);

    // the defining polynomial must be squarefree and not a rational square
    CHECK_THROWS_AS(Field::quad_ext(Poly(4)), InvalidInstanceError);
    Poly s = Poly::sigma();
    CHECK_THROWS_AS(Field::quad_ext(s * s), InvalidInstanceError);
}

TEST_CASE("square roots inside a field") {
    Field F = Field::ratfunc_sigma();
    auto r = F.parse("q/(1+q)^2").sqrt_in_field();
    REQUIRE(r.has_value());
    CHECK(*r * *r == F.parse("q/(1+q)^2"));
    CHECK_FALSE(F.parse("s").sqrt_in_field().has_value());

    Field G = Field::quad_ext(Poly(-1));
    auto i = G.integer(-1).sqrt_in_field();
    REQUIRE(i.has_value());
    CHECK(*i * *i == G.integer(-1));
    auto no = G.parse("s").sqrt_in_field();
    CHECK_FALSE(no.has_value());
}

TEST_CASE("mixed-field operations are rejected") {
    Field F = Field::ratfunc_sigma();
    Field G = Field::quad_ext(Poly(-1));
    CHECK_THROWS_AS(F.one() + G.one(), MixedFieldError);
    Field G2 = Field::quad_ext(Poly(-3));
    CHECK_THROWS_AS(G.theta() * G2.theta(), MixedFieldError);
}

TEST_CASE("exact specialization at rational sigma") {
    Field F = Field::ratfunc_sigma();
    FieldElement x = F.parse("(q-1)/(s+2)");
    FieldElement v = specialize(x, Rational(2));
    CHECK(v.as_rational() == Rational(15, 4));
    CHECK(vanishes_at(F.parse("q - 16"), Rational(2)));
    CHECK_FALSE(vanishes_at(F.parse("q - 15"), Rational(2)));

    Field G = Field::quad_ext(Poly(-1));
    // th-component must vanish on its own when delta(sigma0) is irrational
    Field H = Field::quad_ext(Poly::sigma());
    CHECK(vanishes_at(H.parse("(q-16) + th*(s-2)"), Rational(2)));
    CHECK_FALSE(vanishes_at(H.parse("(q-16) + th"), Rational(2)));
    // delta(sigma0) a rational square: th takes its principal value there
    CHECK(vanishes_at(H.parse("2 - th"), Rational(4)));
    CHECK_FALSE(vanishes_at(H.parse("2 + th"), Rational(4)));
    CHECK(vanishes_at(G.parse("(s-1) + th*(s^2-1)"), Rational(1)));
}

TEST_CASE("big float and complex basics") {
    BigFloat a(Rational(2), 128);
    BigFloat r = a.sqrt();
    CHECK(std::abs(r.to_double() - 1.4142135623730951) < 1e-15);
    BigComplex z(BigFloat(Rational(-4), 128), BigFloat(Rational(0), 128));
    BigComplex w = z.sqrt();
    CHECK(std::abs(w.re().to_double()) < 1e-30);
    CHECK(std::abs(w.im().to_double() - 2.0) < 1e-30);
    CHECK(std::abs((z * z).abs().to_double() - 16.0) < 1e-25);
}

TEST_CASE("complex field backend evaluates the grammar numerically") {
    Field C = Field::complex_floats(128);
    FieldElement x = C.parse("1/2 + 3");
    CHECK(std::abs(x.as_complex().re().to_double() - 3.5) < 1e-30);
    Field F = Field::ratfunc_sigma();
    BigComplex sig(BigFloat(1.25, 128), BigFloat(0.5, 128));
    FieldElement y = specialize_complex(F.parse("s^2"), sig);
    double re = y.as_complex().re().to_double();
    double im = y.as_complex().im().to_double();
    CHECK(std::abs(re - (1.25 * 1.25 - 0.25)) < 1e-12);
    CHECK(std::abs(im - 1.25) < 1e-12);
}
