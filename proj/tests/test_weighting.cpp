#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "modr/errors.hpp"
#include "modr/scan.hpp"
#include "modr/weighting.hpp"

using namespace modr;
using fixtures::loop2_type;

namespace {

// slope vector in sorted edge-id order
std::vector<Int> slope_vec(const ModRType& T) {
    std::vector<std::string> ids;
    for (const auto& e : T.graph.edges) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::vector<Int> out;
    for (const auto& id : ids) out.push_back(rep_mod(T.slope.at(id), T.r));
    return out;
}

std::set<std::vector<Int>> slope_set(const std::vector<ModRType>& list) {
    std::set<std::vector<Int>> out;
    for (const auto& T : list) out.insert(slope_vec(T));
    return out;
}

}  // namespace

TEST_CASE("tree slope solved from the free edge on the two-edge loop") {
    auto F = loop2_type(9, 0, 0);
    auto res = solve_weighting(F.graph, F.contact, 9, {{"e2", 3}});
    REQUIRE(res.feasible);
    CHECK(res.type.slope.at("e1") == 1);  // 4 = m1 + m2 mod 9
    CHECK(balanced(res.type));
}

TEST_CASE("trees admit exactly one weighting") {
    auto T = fixtures::star_type(1, 7);
    auto res = solve_weighting(T.graph, T.contact, 7, {});
    REQUIRE(res.feasible);
    CHECK(res.type.slope.at("e1") == 1);
    auto en = enumerate_weightings(T.graph, T.contact, 7, 1000);
    CHECK(en.count.value() == 1);
    CHECK(en.list.size() == 1);
}

TEST_CASE("self-loop slope is unconstrained") {
    DecoratedGraph g;
    g.vertices.push_back({"v", 1, 0, Cone::External});
    g.edges.push_back({"loop", "v", "v"});
    ContactData c;
    c.d = 0;
    c.g = 2;
    for (Int k = 0; k < 6; ++k) {
        auto res = solve_weighting(g, c, 6, {{"loop", k}});
        REQUIRE(res.feasible);
        CHECK(balanced(res.type));
    }
}

TEST_CASE("missing free assignment raises") {
    auto F = loop2_type(9, 0, 0);
    CHECK_THROWS_AS(solve_weighting(F.graph, F.contact, 9, {}), ArgumentError);
    CHECK_THROWS_AS(solve_weighting(F.graph, F.contact, 9, {{"e1", 0}, {"e2", 0}}),
                    ArgumentError);  // e1 is the tree edge
}

TEST_CASE("inconsistent degree data is reported as infeasible") {
    // d_v = 3 against a contact order 4 leaves the redundant equation unsatisfied
    DecoratedGraph g;
    g.vertices.push_back({"v", 1, 3, Cone::External});
    g.legs.push_back({"l", "v", 0});
    ContactData c;
    c.legs.push_back({9, Rat(4, 9)});
    c.d = 3;  // violates d = sum c_i
    c.g = 1;
    auto res = solve_weighting(g, c, 9, {});
    CHECK(!res.feasible);
}

TEST_CASE("enumeration is lexicographic in the free-slope vector") {
    auto W = fixtures::wedge2_type(3, 0, 0);
    auto en = enumerate_weightings(W.graph, W.contact, 3, 1000);
    std::vector<std::vector<Int>> vecs;
    for (const auto& T : en.list) vecs.push_back(slope_vec(T));
    CHECK(std::is_sorted(vecs.begin(), vecs.end()));
    CHECK(vecs.front() == std::vector<Int>{0, 0});
    CHECK(vecs.back() == std::vector<Int>{2, 2});
}

TEST_CASE("two-edge loop carries r weightings") {
    auto F = loop2_type(9, 0, 0);
    auto en = enumerate_weightings(F.graph, F.contact, 9, 1000);
    CHECK(en.count.base == 9);
    CHECK(en.count.exp == 1);
    CHECK(en.list.size() == 9);
    for (const auto& T : en.list) CHECK(balanced(T));
}

TEST_CASE("wedge of two loops at r = 4 carries 16 weightings") {
    auto W = fixtures::wedge2_type(4, 0, 0);
    auto en = enumerate_weightings(W.graph, W.contact, 4, 1000);
    CHECK(en.count.value() == 16);
    CHECK(en.list.size() == 16);
}

TEST_CASE("enumeration respects the cap") {
    auto W = fixtures::wedge2_type(4, 0, 0);
    try {
        enumerate_weightings(W.graph, W.contact, 4, 10);
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(e.count == "16");  // the exact count rides along
    }
    auto count_only = enumerate_weightings(W.graph, W.contact, 4, 10, false);
    CHECK(count_only.count.value() == 16);
    CHECK(!count_only.materialized);
}

TEST_CASE("solver output equals the brute-force balanced set") {
    std::vector<std::tuple<DecoratedGraph, ContactData, Int>> cases;
    for (Int r : {6, 9, 12}) {
        auto F = loop2_type(r, 0, 0);
        cases.push_back({F.graph, F.contact, r});
    }
    {
        auto W = fixtures::wedge2_type(5, 0, 0);
        for (Int r : {2, 3, 5})
            cases.push_back({W.graph, W.contact, r});
    }
    {
        fixtures::Lcg rng(4);
        auto [g, contact] = fixtures::random_graph(rng, 4, 2);
        for (Int r : {2, 3, 5, 6})
            cases.push_back({g, contact, r});
    }
    for (auto& [g, contact, r] : cases) {
        auto en = enumerate_weightings(g, contact, r, 1 << 20);
        auto sys = balancing_system(g, contact, r);
        auto brute = scan_solutions_serial(sys, 1 << 20);
        std::set<std::vector<Int>> bset(brute.begin(), brute.end());
        CHECK(bset == slope_set(en.list));
        CHECK(en.list.size() == brute.size());
    }
}

TEST_CASE("solving the projection to free edges reproduces each weighting") {
    auto F = loop2_type(9, 0, 0);
    auto inv = compute_invariants(F.graph);
    auto en = enumerate_weightings(F.graph, F.contact, 9, 1000);
    for (const auto& T : en.list) {
        std::map<std::string, Int> free;
        for (const auto& [id, m] : T.slope)
            if (!inv.spanning_tree.count(id)) free[id] = m;
        auto res = solve_weighting(F.graph, F.contact, 9, free);
        REQUIRE(res.feasible);
        CHECK(res.type.slope == T.slope);
    }
}

TEST_CASE("derived edge data") {
    auto F = loop2_type(12, 3, 1);
    auto d = derive_edge_data(F);
    CHECK(d.at("e1").t == 4);
    CHECK(d.at("e1").gerby == 1);

    auto Z = loop2_type(12, 0, 4);
    auto dz = derive_edge_data(Z);
    CHECK(dz.at("e1").t == 1);
    CHECK(dz.at("e1").gerby == 0);

    auto N = loop2_type(9, 6, 7);
    auto dn = derive_edge_data(N);
    CHECK(dn.at("e1").t == 3);
    CHECK(dn.at("e1").gerby == 2);

    // (r/t) * gerby reproduces the slope residue
    for (const auto& T : {F, Z, N}) {
        auto dd = derive_edge_data(T);
        for (const auto& [id, e] : dd)
            CHECK(rep_mod((T.r / e.t) * e.gerby, T.r) == rep_mod(T.slope.at(id), T.r));
    }
}

TEST_CASE("classification") {
    auto triv = fixtures::trivial_type(2, 9);
    auto c1 = classify_type(triv);
    CHECK(c1.trivial);
    CHECK(c1.essential);

    auto star = fixtures::star_type(1, 9);
    auto c2 = classify_type(star);
    CHECK(c2.essential);
    CHECK(!c2.trivial);

    DecoratedGraph g;
    g.vertices.push_back({"a", 1, 0, Cone::Internal});
    g.vertices.push_back({"b", 1, 0, Cone::Internal});
    g.edges.push_back({"e", "a", "b"});
    ModRType T{g, ContactData{{}, 0, 2}, 5, {{"e", 0}}};
    auto c3 = classify_type(T);
    CHECK(!c3.essential);

    auto internal_g0 = fixtures::star_type(0, 9);
    CHECK(!classify_type(internal_g0).essential);
}

TEST_CASE("reduction maps level 18 onto level 9 with fibers of size 2") {
    auto base = loop2_type(9, 0, 0);
    auto big = loop2_type(18, 0, 0);
    big.contact = scale_contact(base.contact, 9, 2);

    auto en18 = enumerate_weightings(big.graph, big.contact, 18, 1000);
    REQUIRE(en18.list.size() == 18);
    std::map<std::vector<Int>, Int> hits;
    for (const auto& T : en18.list) {
        auto red = weighting_reduce(T, 2);
        CHECK(red.r == 9);
        CHECK(balanced(red));
        ++hits[slope_vec(red)];
    }
    auto en9 = enumerate_weightings(base.graph, base.contact, 9, 1000);
    CHECK(hits.size() == en9.list.size());
    for (const auto& [vec, cnt] : hits) CHECK(cnt == 2);  // lambda^{b1}
}

TEST_CASE("reduction fiber sizes on a b1 = 2 shape") {
    auto base = fixtures::theta_type(6, 0, 0, 0);
    auto big = fixtures::theta_type(12, 0, 0, 0);
    big.contact = scale_contact(base.contact, 6, 2);
    auto en_big = enumerate_weightings(big.graph, big.contact, 12, 1 << 16);
    REQUIRE(en_big.list.size() == 144);
    std::map<std::vector<Int>, Int> hits;
    for (const auto& T : en_big.list) {
        auto red = weighting_reduce(T, 2);
        CHECK(balanced(red));
        ++hits[slope_vec(red)];
    }
    CHECK(hits.size() == 36);                      // onto the level-6 set
    for (const auto& [vec, cnt] : hits) CHECK(cnt == 4);  // lambda^{b1}
}

TEST_CASE("reduction fibers on random graphs") {
    fixtures::Lcg rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        Int nv = rng.uniform(2, 4);
        Int b1 = rng.uniform(0, 2);
        auto [g, contact] = fixtures::random_graph(rng, nv, b1);
        for (Int r : {4, 6})
            for (Int lambda : {2, 3}) {
                auto big_contact = scale_contact(contact, r, lambda);
                auto en_big = enumerate_weightings(g, big_contact, r * lambda, 1 << 18);
                std::map<std::vector<Int>, Int> hits;
                for (const auto& T : en_big.list) {
                    auto red = weighting_reduce(T, lambda);
                    CHECK(balanced(red));
                    ++hits[slope_vec(red)];
                }
                CHECK(BigInt(hits.size()) == big_pow(r, b1));
                for (const auto& [vec, cnt] : hits)
                    CHECK(BigInt(cnt) == big_pow(lambda, b1));
            }
    }
}

TEST_CASE("reduction at lambda = 1 is the identity") {
    auto T = loop2_type(9, 1, 3);
    auto red = weighting_reduce(T, 1);
    CHECK(red.r == 9);
    CHECK(red.slope == T.slope);
    CHECK(red.contact.legs[0].s == T.contact.legs[0].s);
}

TEST_CASE("reduction rejects bad lambda") {
    auto T = loop2_type(9, 1, 3);
    CHECK_THROWS_AS(weighting_reduce(T, 2), ArgumentError);  // 2 does not divide 9
    auto big = loop2_type(18, 1, 3);
    big.contact = scale_contact(loop2_type(9, 0, 0).contact, 9, 2);
    big.contact.legs[0].s = 9;  // lambda no longer divides s
    CHECK_THROWS_AS(weighting_reduce(big, 2), DomainError);
}
