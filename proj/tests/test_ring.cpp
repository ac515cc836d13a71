#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradecone/module_element.hpp"
#include "gradecone/parse.hpp"

using namespace gradecone;

TEST_CASE("prime field arithmetic") {
    FpContext f(32003);
    auto a = f.from_int(12345), b = f.from_int(31999);

    CHECK(a + b == f.from_int(12345 + 31999 - 32003));
    CHECK((a * b) * a.inv() == b);
    CHECK(-a + a == f.zero());
    CHECK((a / b) * b == a);
    CHECK(f.from_int(-1) == f.from_int(32002));

    CHECK(f.from_int(0).is_zero());
    CHECK(f.one().is_one());
    CHECK_THROWS(f.zero().inv());

    FpContext g(101);
    CHECK_THROWS(void(f.one() + g.one()));
}

TEST_CASE("prime field parses long decimal strings without overflow") {
    FpContext f(32003);
    // 10^18 mod 32003 computed independently: pow(10, 18, 32003) = 14604
    CHECK(f.from_decimal_string("1000000000000000000") == f.from_int(14604));
    CHECK(f.from_decimal_string("32003") == f.zero());
}

TEST_CASE("rational field canonicalizes") {
    RatContext q;
    auto half = q.from_int(1) / q.from_int(2);
    auto third = q.from_int(1) / q.from_int(3);
    auto sum = half + third;
    CHECK(sum.str() == "5/6");
    CHECK((q.from_int(2) / q.from_int(4)).str() == "1/2");
    CHECK((q.from_int(-3) / q.from_int(-6)).str() == "1/2");
    CHECK((q.from_int(1) / q.from_int(-2)).str() == "-1/2");
    CHECK(q.from_decimal_string("42") == q.from_int(42));
}

TEST_CASE("primality scan used for --field validation") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(32003));
    CHECK(is_prime_u32(65537));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(32001));
    CHECK_FALSE(is_prime_u32(65536));
}

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::var(0, 3), y = Monomial::var(1, 3), z = Monomial::var(2, 3);
    auto m = x * x * y; // x^2 y

    CHECK(m.degree() == 3);
    CHECK(x.divides(m));
    CHECK_FALSE(z.divides(m));
    CHECK(x.divide_into(m) == x * y);
    CHECK(m.lcm(y * z) == x * x * y * z);
    CHECK(m.coprime(z));
    CHECK_FALSE(m.coprime(y));
    CHECK_THROWS(m.divide_into(x));

    CHECK(m.without_var(2) == Monomial({2, 1}));
    CHECK(Monomial({2, 1}).with_appended_var(4) == Monomial({2, 1, 4}));
}

TEST_CASE("monomial orders") {
    Monomial xz({1, 0, 1}), y2({0, 2, 0}), x2t({2, 0, 1}), y3t0({0, 3, 0});

    MonomialOrder lex{OrderKind::Lex};
    CHECK(lex.greater(xz, y2)); // x beats y^2 under lex

    MonomialOrder grevlex{OrderKind::GrevLex};
    CHECK(grevlex.greater(y2, xz));  // same degree, smaller last exponent wins
    CHECK(grevlex.greater(y3t0, xz)); // higher degree wins

    MonomialOrder grlex{OrderKind::GrLex};
    CHECK(grlex.greater(xz, y2)); // same degree, then lex

    // degree first, then more of the last variable, then grevlex on the rest
    MonomialOrder theavy{OrderKind::HomogTHeavy};
    CHECK(theavy.greater(x2t, y3t0));
    CHECK(theavy.compare(x2t, x2t) == 0);
}

TEST_CASE("polynomial arithmetic over the rationals") {
    RatContext q;
    auto R = make_ring<RatContext>(q, {"x", "y"}, OrderKind::GrevLex);
    auto f = parse_polynomial<RatContext>(R, "x + y");
    auto g = parse_polynomial<RatContext>(R, "x - y");

    CHECK(f * g == parse_polynomial<RatContext>(R, "x^2 - y^2"));
    CHECK((f + g) == parse_polynomial<RatContext>(R, "2*x"));
    CHECK(f - f == Polynomial<RatContext>::zero(R));
    auto sq = f * f;
    CHECK(sq == parse_polynomial<RatContext>(R, "x^2 + 2*x*y + y^2"));
    CHECK(sq.degree() == 2);
    CHECK(sq.is_homogeneous());

    auto mixed = parse_polynomial<RatContext>(R, "x^3 + x*y + 2*y");
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(mixed.ord() == 1);
    CHECK(mixed.initial_form() == parse_polynomial<RatContext>(R, "2*y"));
    CHECK(mixed.truncated(3) == parse_polynomial<RatContext>(R, "x*y + 2*y"));
    CHECK(mixed.component(2) == parse_polynomial<RatContext>(R, "x*y"));
}

TEST_CASE("homogenization round trip") {
    FpContext f(32003);
    auto R = make_ring<FpContext>(f, {"x", "y"}, OrderKind::GrevLex);
    auto Rt = R->with_appended_var("t", OrderKind::GrevLex);

    auto g = parse_polynomial<FpContext>(R, "x^2 - y^3 + x*y");
    auto gh = g.homogenized(Rt);
    CHECK(gh.is_homogeneous());
    CHECK(gh == parse_polynomial<FpContext>(Rt, "x^2*t - y^3 + x*y*t"));
    CHECK(gh.dehomogenized(R) == g);

    auto divisible = parse_polynomial<FpContext>(Rt, "x*t^2 + t^3");
    CHECK(divisible.last_var_power_stripped() ==
          parse_polynomial<FpContext>(Rt, "x + t"));
}

TEST_CASE("parser accepts the grammar and reports positions") {
    FpContext f(32003);
    auto R = make_ring<FpContext>(f, {"x", "y"}, OrderKind::GrevLex);

    auto p = parse_polynomial<FpContext>(R, "-x^2 + (x + y)*(x - y) - 3");
    CHECK(p == parse_polynomial<FpContext>(R, "-y^2 - 3"));

    CHECK(parse_polynomial<FpContext>(R, "0").is_zero());
    CHECK(parse_polynomial<FpContext>(R, "x - x").is_zero());

    CHECK_THROWS_AS(parse_polynomial<FpContext>(R, "x + z"), ParseError);
    CHECK_THROWS_AS(parse_polynomial<FpContext>(R, "x ^"), ParseError);
    CHECK_THROWS_AS(parse_polynomial<FpContext>(R, "(x + y"), ParseError);
    try {
        parse_polynomial<FpContext>(R, "x + z");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("canonical text form round trips") {
    RatContext q;
    auto R = make_ring<RatContext>(q, {"x", "y"}, OrderKind::GrevLex);
    for (const char* src : {"x^2 - y^3", "-x + 1/2", "x*y - x - y + 1", "3*x^2*y^4"}) {
        auto p = parse_polynomial<RatContext>(R, src);
        CHECK(parse_polynomial<RatContext>(R, p.str()) == p);
    }
    CHECK(parse_polynomial<RatContext>(R, "y^3 - x^2").str() == "y^3 - x^2");
}

TEST_CASE("module elements order terms by shifted degree") {
    FpContext f(32003);
    auto R = make_ring<FpContext>(f, {"x", "y"}, OrderKind::GrevLex);
    auto M = make_free_module<FpContext>(R, {0, 2});

    auto x2e0 = ModElem<FpContext>::from_poly(M, parse_polynomial<FpContext>(R, "x^2"), 0);
    auto ye1 = ModElem<FpContext>::from_poly(M, parse_polynomial<FpContext>(R, "y"), 1);
    auto s = x2e0 + ye1;

    // x^2 e_0 has shifted degree 2, y e_1 has shifted degree 3
    CHECK(s.leading_term().comp == 1);
    CHECK(s.degree() == 3);
    CHECK_FALSE(s.is_homogeneous());
    CHECK((x2e0 + ModElem<FpContext>::from_poly(M, parse_polynomial<FpContext>(R, "1"), 1))
              .is_homogeneous());

    CHECK(s.component(0) == parse_polynomial<FpContext>(R, "x^2"));
    CHECK(s.component(1) == parse_polynomial<FpContext>(R, "y"));
    CHECK(s - s == ModElem<FpContext>::zero(M));
    CHECK(s.truncated(3) == x2e0);

    auto e1 = ModElem<FpContext>::basis_vector(M, 1);
    CHECK(e1.degree() == 2);
    CHECK(e1.poly_multiplied(parse_polynomial<FpContext>(R, "x + y")).degree() == 3);
}
