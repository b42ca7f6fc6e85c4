#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "modr/errors.hpp"
#include "modr/pushforward.hpp"
#include "modr/scan.hpp"

using namespace modr;
using fixtures::loop2_type;

TEST_CASE("pushforward degree floors each point against its own isotropy") {
    CHECK(pushforward_degree({{{4, 9}}, 0}) == 0);
    CHECK(pushforward_degree({{{-3, 9}}, 0}) == -1);
    CHECK(pushforward_degree({{{7, 1}, {-2, 1}, {5, 1}}, 3}) == 7 - 2 + 5 + 3);
    CHECK(pushforward_degree({{{13, 5}, {4, 3}}, -1}) == 2 + 1 - 1);
}

TEST_CASE("pushforward degree is bounded by the exact degree") {
    fixtures::Lcg rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FractionalDivisor D;
        Int nterms = rng.uniform(0, 5);
        bool all_divide = true;
        for (Int i = 0; i < nterms; ++i) {
            Int s = rng.uniform(1, 9);
            Int a = rng.uniform(-20, 20);
            if (a % s != 0) all_divide = false;
            D.terms.push_back({a, s});
        }
        D.integer_part = rng.uniform(-3, 3);
        Rat push = pushforward_degree(D);
        Rat exact = exact_degree(D);
        CHECK(push <= exact);
        CHECK((push == exact) == all_divide);
    }
}

TEST_CASE("degree-zero pushforward at the degree-4 external vertex") {
    auto T = loop2_type(9, 1, 3);
    CHECK(external_vertex_pushdeg(T, "v1") == 0);
    // the divisor ages sum to d_v/r exactly
    auto D = external_vertex_divisor(T, "v1");
    CHECK(exact_degree(D) == Rat(4, 9));
}

TEST_CASE("single external node with matching slope pushes to zero") {
    auto T = fixtures::star_type(1, 101);
    T.graph.vertices[0].degree = 7;
    T.graph.vertices[1].degree = -7;
    T.slope["e1"] = 7;
    CHECK(external_vertex_pushdeg(T, "v0") == 0);
}

TEST_CASE("residues summing past r give a negative pushforward") {
    // brute-force search for a witness among all weightings
    auto base = loop2_type(9, 0, 0);
    auto sys = balancing_system(base.graph, base.contact, 9);
    auto sols = scan_solutions_serial(sys, 1000);
    bool found_negative = false;
    for (const auto& sol : sols) {
        auto T = loop2_type(9, sol[0], sol[1]);
        if (external_vertex_pushdeg(T, "v1") < 0) found_negative = true;
    }
    CHECK(found_negative);
    // explicit witness: residues 5 + 8 = 13 > 4
    auto W = loop2_type(9, 5, 8);
    CHECK(external_vertex_pushdeg(W, "v1") == -1);
}

TEST_CASE("internal vertices are rejected") {
    auto T = loop2_type(9, 1, 3);
    CHECK_THROWS_AS(external_vertex_pushdeg(T, "v2"), DomainError);
}

TEST_CASE("vertex with no edges") {
    auto T = fixtures::trivial_type(2, 9);
    T.graph.vertices[0].degree = 0;
    CHECK(external_vertex_pushdeg(T, "v0") == 0);
}

TEST_CASE("necessary inducibility conditions") {
    auto T = fixtures::trivial_type(1, 9);
    auto rep = inducibility_necessary(T);
    CHECK(rep.window_ok);
    CHECK(rep.possibly_inducible);

    auto L = loop2_type(9, 1, 3);
    auto rl = inducibility_necessary(L);
    CHECK(rl.window_ok);
    CHECK(rl.pushdeg_ok.at("v1"));
    CHECK(rl.possibly_inducible);
    CHECK(rl.pushdeg.count("v2") == 0);  // internal vertices are not checked

    auto B = loop2_type(9, 5, 8);
    auto rb = inducibility_necessary(B);
    CHECK(!rb.pushdeg_ok.at("v1"));
    CHECK(!rb.possibly_inducible);
}

TEST_CASE("pushforward additivity only without floor interaction") {
    // decomposed vs joint form of the external-vertex divisor
    auto T = loop2_type(9, 1, 3);
    auto D = external_vertex_divisor(T, "v1");
    FractionalDivisor first{{D.terms[0]}, 0};
    FractionalDivisor rest{{D.terms.begin() + 1, D.terms.end()}, D.integer_part};
    // the joint form floors the combined surplus; splitting loses the interaction
    Int joint = pushforward_degree(D);
    Int split = pushforward_degree(first) + pushforward_degree(rest);
    CHECK(joint == 0);
    CHECK(split == joint);  // terms here are 1, 3 and the balancing term 0

    // an interacting pair: the floors differ once a negative term is split off
    FractionalDivisor mix{{{4, 9}, {-3, 9}}, 0};
    CHECK(pushforward_degree(mix) == -1);
    CHECK(pushforward_degree({{{1, 9}}, 0}) == 0);  // exact sum 1/9 floors to 0 jointly

    // with untwisted parts only, concatenation is additive
    FractionalDivisor a{{{3, 1}, {4, 1}}, 1};
    FractionalDivisor b{{{-2, 1}}, 0};
    FractionalDivisor both{{{3, 1}, {4, 1}, {-2, 1}}, 1};
    CHECK(pushforward_degree(both) == pushforward_degree(a) + pushforward_degree(b));
}
