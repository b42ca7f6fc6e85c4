#pragma once

#include <map>
#include <string>
#include <vector>

#include "modr/compare.hpp"
#include "modr/contact.hpp"
#include "modr/graph.hpp"
#include "modr/numeric.hpp"
#include "modr/weighting.hpp"

namespace fixtures {

using namespace modr;

// Single external vertex of full genus: the main-component type.
inline ModRType trivial_type(Int g, Int r, Int n_legs = 0) {
    ModRType T;
    T.graph.vertices.push_back({"v0", g, 0, Cone::External});
    T.contact.d = 0;
    T.contact.g = g;
    for (Int i = 0; i < n_legs; ++i) {
        T.contact.legs.push_back({1, Rat(0)});
        T.graph.legs.push_back({"l" + std::to_string(i), "v0", i});
    }
    T.r = r;
    return T;
}

// External degree-1 vertex joined to an internal genus-g vertex; slope 1.
inline ModRType star_type(Int g, Int r) {
    ModRType T;
    T.graph.vertices.push_back({"v0", 0, 1, Cone::External});
    T.graph.vertices.push_back({"v1", g, -1, Cone::Internal});
    T.graph.edges.push_back({"e1", "v0", "v1"});
    T.contact.d = 0;
    T.contact.g = g;
    T.r = r;
    T.slope["e1"] = 1;
    return T;
}

// One external degree-2 vertex joined to two internal genus-1 vertices; slopes 1, 1.
inline ModRType two_internal_type(Int r) {
    ModRType T;
    T.graph.vertices.push_back({"v0", 0, 2, Cone::External});
    T.graph.vertices.push_back({"v1", 1, -1, Cone::Internal});
    T.graph.vertices.push_back({"v2", 1, -1, Cone::Internal});
    T.graph.edges.push_back({"e1", "v0", "v1"});
    T.graph.edges.push_back({"e2", "v0", "v2"});
    T.contact.d = 0;
    T.contact.g = 2;
    T.r = r;
    T.slope["e1"] = 1;
    T.slope["e2"] = 1;
    return T;
}

// Single internal genus-g vertex, no edges, no legs.
inline ModRType internal_vertex_type(Int g, Int r) {
    ModRType T;
    T.graph.vertices.push_back({"v0", g, 0, Cone::Internal});
    T.contact.d = 0;
    T.contact.g = g;
    T.r = r;
    return T;
}

// External degree-4 vertex joined to an internal vertex by two parallel edges;
// the internal vertex carries one leg of coarse contact 4. Genus 1 overall.
inline ModRType loop2_type(Int r, Int m1, Int m2) {
    ModRType T;
    T.graph.vertices.push_back({"v1", 0, 4, Cone::External});
    T.graph.vertices.push_back({"v2", 0, 0, Cone::Internal});
    T.graph.edges.push_back({"e1", "v1", "v2"});
    T.graph.edges.push_back({"e2", "v1", "v2"});
    T.graph.legs.push_back({"l1", "v2", 0});
    T.contact.d = 4;
    T.contact.g = 1;
    Int g = gcd_nonneg(r, 4);
    T.contact.legs.push_back({r / g, Rat(4, r)});
    T.r = r;
    T.slope["e1"] = rep_mod(m1, r);
    T.slope["e2"] = rep_mod(m2, r);
    return T;
}

// Theta graph: the two-edge loop fixture with a third parallel edge, so b1 = 2.
inline ModRType theta_type(Int r, Int m1, Int m2, Int m3) {
    auto T = loop2_type(r, m1, m2);
    T.graph.edges.push_back({"e3", "v1", "v2"});
    T.slope["e3"] = rep_mod(m3, r);
    T.contact.g = 2;  // b1 went up by one
    return T;
}

// Two-edge loop with symmetric degrees (+a, -a) and no legs; cones configurable.
inline ModRType loop2_bare(Int r, Int m1, Int m2, Cone c1 = Cone::External,
                           Cone c2 = Cone::External) {
    ModRType T;
    Int a = rep_mod(m1 + m2, r);
    if (2 * a > r) a -= r;
    T.graph.vertices.push_back({"v1", 0, a, c1});
    T.graph.vertices.push_back({"v2", 0, -a, c2});
    T.graph.edges.push_back({"e1", "v1", "v2"});
    T.graph.edges.push_back({"e2", "v1", "v2"});
    T.contact.d = 0;
    T.contact.g = 1;
    T.r = r;
    T.slope["e1"] = rep_mod(m1, r);
    T.slope["e2"] = rep_mod(m2, r);
    return T;
}

// One external vertex carrying two self-loops (wedge of two loops), genus 2.
inline ModRType wedge2_type(Int r, Int k1, Int k2) {
    ModRType T;
    T.graph.vertices.push_back({"v0", 0, 0, Cone::External});
    T.graph.edges.push_back({"e1", "v0", "v0"});
    T.graph.edges.push_back({"e2", "v0", "v0"});
    T.contact.d = 0;
    T.contact.g = 2;
    T.r = r;
    T.slope["e1"] = rep_mod(k1, r);
    T.slope["e2"] = rep_mod(k2, r);
    return T;
}

inline ZhatType to_zhat(const ModRType& T, std::map<std::string, Int> islope) {
    return ZhatType{T.graph, T.contact, std::move(islope)};
}

// Small deterministic generator for pseudo-random connected fixtures.
struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    Int uniform(Int lo, Int hi) {  // inclusive
        return lo + static_cast<Int>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

// Connected multigraph on nv vertices with extra non-tree edges; all degrees 0,
// no legs, genus labels 0, so every (g = b1, d = 0) contact is valid for any r.
inline std::pair<DecoratedGraph, ContactData> random_graph(Lcg& rng, Int nv, Int extra) {
    DecoratedGraph g;
    for (Int i = 0; i < nv; ++i)
        g.vertices.push_back({"v" + std::to_string(i), 0, 0,
                              rng.uniform(0, 1) ? Cone::Internal : Cone::External});
    Int eid = 0;
    for (Int i = 1; i < nv; ++i) {
        Int j = rng.uniform(0, i - 1);
        g.edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(j),
                           "v" + std::to_string(i)});
    }
    for (Int k = 0; k < extra; ++k) {
        Int a = rng.uniform(0, nv - 1);
        Int b = rng.uniform(0, nv - 1);
        g.edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(a),
                           "v" + std::to_string(b)});
    }
    ContactData contact;
    contact.d = 0;
    contact.g = extra;  // b1 = extra, all genus labels 0
    return {std::move(g), std::move(contact)};
}

}  // namespace fixtures
