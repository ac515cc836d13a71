#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradecone/local.hpp"
#include "gradecone/parse.hpp"
#include "gradecone/betti.hpp"
#include "gradecone/resolution.hpp"

using namespace gradecone;
using Ctx = FpContext;
using Poly = Polynomial<Ctx>;

namespace {

Ctx field{32003};

RingPtr<Ctx> ring2() { return make_ring(field, {"x", "y"}); }

std::vector<Poly> parse_all(const RingPtr<Ctx>& R, std::initializer_list<const char*> src) {
    std::vector<Poly> out;
    for (const char* s : src) out.push_back(parse_polynomial<Ctx>(R, s));
    return out;
}

BettiTable cone_betti(const RingPtr<Ctx>& R, const std::vector<Poly>& gens) {
    auto cone = tangent_cone(R, gens);
    auto f0 = rank_one_module(R);
    auto res = minimal_free_resolution(f0, wrap_ideal(f0, cone));
    std::vector<std::vector<int>> shifts;
    for (const auto& m : res.modules) shifts.push_back(m->degrees);
    return betti_from_shifts(shifts);
}

} // namespace

TEST_CASE("tangent cone picks out initial forms") {
    auto R = ring2();

    SUBCASE("cusp: one hypersurface, order two") {
        auto cone = tangent_cone(R, parse_all(R, {"x^2 - y^3"}));
        REQUIRE(cone.size() == 1);
        CHECK(cone[0].str() == "x^2");
    }

    SUBCASE("homogeneous input passes through as its own basis") {
        auto cone = tangent_cone(R, parse_all(R, {"x^2", "x*y"}));
        REQUIRE(cone.size() == 2);
        CHECK(cone[0].is_homogeneous());
        CHECK(cone[1].is_homogeneous());
        CHECK(quotient_dimension(R, cone) == 1);
    }

    SUBCASE("higher-order tail does not disturb the cone") {
        auto plain = tangent_cone(R, parse_all(R, {"x^2 - y^3"}));
        auto tailed = tangent_cone(R, parse_all(R, {"x^2 - y^3 + y^7"}));
        REQUIRE(plain.size() == tailed.size());
        CHECK(plain[0].str() == tailed[0].str());
    }
}

TEST_CASE("cone of a monomial space curve needs saturation") {
    // numerical semigroup <4,5,11>: the initial forms of the three defining
    // binomials do not generate the cone, and the cone quotient has a
    // resolution one step longer than the codimension
    auto R = make_ring(field, {"x", "y", "z"});
    auto gens = parse_all(R, {"x^4 - y*z", "y^3 - x*z", "z^2 - x^3*y^2"});
    auto cone = tangent_cone(R, gens);
    CHECK(cone.size() > 3);
    CHECK(quotient_dimension(R, cone) == 1);

    auto f0 = rank_one_module(R);
    auto res = minimal_free_resolution(f0, wrap_ideal(f0, cone));
    std::vector<std::vector<int>> shifts;
    for (const auto& m : res.modules) shifts.push_back(m->degrees);
    auto bt = betti_from_shifts(shifts);
    CHECK(bt.p == 3); // depth 0 over three variables: the cone is not CM
    CHECK(bt.alpha == std::vector<int>{0, 4, 5, 4});
    CHECK(bt.alpha[3] < bt.alpha[2]);
}

TEST_CASE("length and loewy length of artinian quotients") {
    auto R = ring2();
    auto gens = parse_all(R, {"x^2", "x*y", "y^5"});

    CHECK(local_length(R, gens) == 6); // 1, x, y, y^2, y^3, y^4
    CHECK(loewy_length(R, gens) == 5);
    CHECK(loewy_length(R, gens) == regularity(cone_betti(R, gens)) + 1);

    SUBCASE("positive dimension is rejected") {
        auto thin = parse_all(R, {"x^2", "x*y"});
        CHECK_THROWS_AS(local_length(R, thin), std::domain_error);
        auto cone = tangent_cone(R, thin);
        CHECK_THROWS_AS(standard_monomials_all(R, cone), std::domain_error);
    }
}

TEST_CASE("local hilbert data of the cusp") {
    auto R = ring2();
    auto hd = local_hilbert(R, parse_all(R, {"x^2 - y^3"}));
    CHECK(hd.dim == 1);
    CHECK(hd.h_poly.c == std::vector<long long>{1, 1});
    CHECK(hd.e == std::vector<long long>{2, 1});
    CHECK(hd.mu == 1);
    CHECK(hilbert_function(hd, 5) == std::vector<long long>{1, 2, 2, 2, 2, 2});
}

TEST_CASE("superficial elements on the cusp") {
    auto R = ring2();
    auto gens = parse_all(R, {"x^2 - y^3"});
    auto q = build_artin_quotient(R, gens, 9);

    SUBCASE("y acts without torsion, x does not") {
        CHECK(superficial_window_check(q, parse_polynomial<Ctx>(R, "y"), 2, 8));
        CHECK_FALSE(superficial_window_check(q, parse_polynomial<Ctx>(R, "x"), 2, 8));
    }

    SUBCASE("the randomized search is reproducible") {
        auto a = find_superficial(R, gens, 50, 2, 10, 42);
        auto b = find_superficial(R, gens, 50, 2, 10, 42);
        REQUIRE(a.found);
        REQUIRE(b.found);
        CHECK(a.ell.str() == b.ell.str());
        CHECK(a.trials_used == b.trials_used);
    }

    SUBCASE("artinian input is rejected") {
        auto art = parse_all(R, {"x^2", "y^2"});
        CHECK_THROWS_AS(find_superficial(R, art, 10, 2, 8, 1), std::invalid_argument);
    }
}

TEST_CASE("diagnose_local classifies the worked quotients") {
    auto R = ring2();

    SUBCASE("cusp: one-dimensional and cohen-macaulay") {
        auto d = diagnose_local(R, parse_all(R, {"x^2 - y^3"}), 100, 2, 10, 42);
        CHECK(d.dim == 1);
        CHECK(d.depth == 1);
        CHECK(d.certified);
        CHECK(d.cm);
        CHECK(d.e0 == 2);
        CHECK(d.cut_length == 2);
    }

    SUBCASE("x kills a finite submodule: depth zero") {
        auto d = diagnose_local(R, parse_all(R, {"x^2", "x*y"}), 100, 2, 10, 42);
        CHECK(d.dim == 1);
        CHECK(d.depth == 0);
        CHECK(d.certified);
        CHECK_FALSE(d.cm);
    }

    SUBCASE("artinian quotients certify immediately") {
        auto d = diagnose_local(R, parse_all(R, {"x^2", "x*y", "y^5"}), 100, 2, 10, 42);
        CHECK(d.dim == 0);
        CHECK(d.certified);
        CHECK(d.cm);
        CHECK(d.cut_length == 6);
    }
}

TEST_CASE("superficial search succeeds against a non-CM cone") {
    // the colon (m^{n+1} : l) carries junk of bounded order whenever the
    // cone fails to be CM, so the window check must scan its cutoff; this
    // instance regresses that scan
    auto R = make_ring(field, {"x", "y", "z"});
    auto gens = parse_all(R, {"x^4 - y*z", "y^3 - x*z", "z^2 - x^3*y^2"});
    auto d = diagnose_local(R, gens, 200, 2, 12, 7);
    CHECK(d.dim == 1);
    CHECK(d.certified);
    CHECK(d.cm);
    CHECK(d.e0 == d.cut_length);
}
