#include "modr/weighting.hpp"

#include <algorithm>
#include <unordered_map>

#include "modr/errors.hpp"

namespace modr {

namespace {

// sum of coarse contact orders of the legs attached at each vertex id
std::unordered_map<std::string, Int> leg_contact_sums(const DecoratedGraph& g,
                                                      const ContactData& contact, Int r) {
    auto cs = coarse_contacts(contact, r);
    std::unordered_map<std::string, Int> out;
    for (const auto& l : g.legs)
        out[l.vertex] += cs.at(static_cast<std::size_t>(l.leg_index));
    return out;
}

}  // namespace

Int balancing_residual(const ModRType& T, const std::string& vertex_id) {
    const auto& v = T.graph.vertex(vertex_id);
    Int acc = v.degree;
    for (const auto& e : T.graph.edges) {
        if (e.source == e.target) continue;
        Int m = T.slope.count(e.id) ? T.slope.at(e.id) : 0;
        if (e.source == vertex_id) acc -= m;
        if (e.target == vertex_id) acc += m;
    }
    auto cs = coarse_contacts(T.contact, T.r);
    for (const auto& l : T.graph.legs)
        if (l.vertex == vertex_id) acc -= cs.at(static_cast<std::size_t>(l.leg_index));
    return rep_mod(acc, T.r);
}

bool balanced(const ModRType& T) {
    for (const auto& v : T.graph.vertices)
        if (balancing_residual(T, v.id) != 0) return false;
    return true;
}

SolveResult solve_weighting(const DecoratedGraph& g, const ContactData& contact, Int r,
                            const std::map<std::string, Int>& free_slopes) {
    auto inv = compute_invariants(g);
    for (const auto& e : g.edges) {
        bool tree = inv.spanning_tree.count(e.id) > 0;
        bool given = free_slopes.count(e.id) > 0;
        if (!tree && !given)
            throw ArgumentError("missing free slope for non-tree edge " + e.id);
        if (tree && given)
            throw ArgumentError("slope given for tree edge " + e.id);
    }
    for (const auto& [id, m] : free_slopes) {
        (void)m;
        g.edge_index(id);
    }

    ModRType T;
    T.graph = g;
    T.contact = contact;
    T.r = r;
    for (const auto& [id, m] : free_slopes) T.slope[id] = rep_mod(m, r);

    // iterated leaf elimination on the spanning tree
    auto legsum = leg_contact_sums(g, contact, r);
    std::map<std::string, Int> tree_deg;  // remaining unsolved tree edges per vertex
    for (const auto& e : g.edges)
        if (inv.spanning_tree.count(e.id)) {
            ++tree_deg[e.source];
            ++tree_deg[e.target];
        }
    std::size_t remaining = inv.spanning_tree.size();
    while (remaining > 0) {
        // find a leaf (deterministically: smallest vertex id with tree degree 1)
        std::string leaf;
        for (const auto& [vid, deg] : tree_deg)
            if (deg == 1) {
                leaf = vid;
                break;
            }
        // locate its unique unsolved tree edge
        const Edge* pend = nullptr;
        for (const auto& e : g.edges) {
            if (!inv.spanning_tree.count(e.id) || T.slope.count(e.id)) continue;
            if (e.source == leaf || e.target == leaf) {
                pend = &e;
                break;
            }
        }
        // known contributions at the leaf
        Int acc = g.vertex(leaf).degree;
        if (legsum.count(leaf)) acc -= legsum.at(leaf);
        for (const auto& e : g.edges) {
            if (e.id == pend->id || e.source == e.target) continue;
            if (!T.slope.count(e.id)) continue;
            if (e.source == leaf) acc -= T.slope.at(e.id);
            if (e.target == leaf) acc += T.slope.at(e.id);
        }
        // d_v = +m (source) or -m (target) plus the rest, mod r
        Int m = (pend->source == leaf) ? rep_mod(acc, r) : rep_mod(-acc, r);
        T.slope[pend->id] = m;
        --tree_deg[pend->source];
        --tree_deg[pend->target];
        --remaining;
    }

    if (!balanced(T)) return {false, {}};
    return {true, std::move(T)};
}

WeightingEnumeration enumerate_weightings(const DecoratedGraph& g, const ContactData& contact,
                                          Int r, const BigInt& cap, bool materialize) {
    auto inv = compute_invariants(g);
    WeightingEnumeration out;
    out.count = {r, inv.b1};
    if (!materialize) return out;
    if (out.count.value() > cap)
        throw BudgetError("weighting count exceeds cap", big_to_string(out.count.value()));

    std::vector<std::string> free_edges;
    for (const auto& e : g.edges)
        if (!inv.spanning_tree.count(e.id)) free_edges.push_back(e.id);
    std::sort(free_edges.begin(), free_edges.end());

    std::vector<Int> digits(free_edges.size(), 0);
    while (true) {
        std::map<std::string, Int> free;
        for (std::size_t i = 0; i < free_edges.size(); ++i) free[free_edges[i]] = digits[i];
        auto solved = solve_weighting(g, contact, r, free);
        if (!solved.feasible)
            throw DomainError("balancing system inconsistent: d != sum c_i");
        out.list.push_back(std::move(solved.type));
        // odometer, rightmost digit fastest
        std::size_t i = digits.size();
        while (i > 0) {
            if (++digits[i - 1] < r) break;
            digits[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    out.materialized = true;
    return out;
}

std::map<std::string, EdgeDerived> derive_edge_data(const ModRType& T) {
    std::map<std::string, EdgeDerived> out;
    for (const auto& e : T.graph.edges) {
        Int m = rep_mod(T.slope.count(e.id) ? T.slope.at(e.id) : 0, T.r);
        Int gd = (m == 0) ? T.r : gcd_nonneg(T.r, m);
        Int t = T.r / gd;
        // m is a multiple of r/t = gd; the gerby slope is the cofactor mod t
        Int gerby = rep_mod(m / gd, t);
        out[e.id] = {t, gerby};
    }
    return out;
}

Classification classify_graph(const DecoratedGraph& g, const GraphInvariants& inv) {
    Classification c;
    c.essential = true;
    for (const auto& e : g.edges)
        if (!inv.bipartite_edges.count(e.id)) {
            c.essential = false;
            c.reasons.push_back("edge " + e.id + " is not bipartite");
        }
    for (const auto& v : g.vertices)
        if (v.cone == Cone::Internal && v.genus <= 0) {
            c.essential = false;
            c.reasons.push_back("internal vertex " + v.id + " has genus 0");
        }
    c.trivial = g.vertices.size() == 1 && g.edges.empty() &&
                g.vertices[0].cone == Cone::External;
    if (c.essential && c.reasons.empty()) c.reasons.push_back("bipartite with positive internal genera");
    return c;
}

Classification classify_type(const ModRType& T) {
    return classify_graph(T.graph, compute_invariants(T.graph));
}

ModRType weighting_reduce(const ModRType& T, Int lambda) {
    if (lambda <= 0) throw DomainError("lambda must be positive");
    if (T.r % lambda != 0)
        throw ArgumentError("lambda does not divide the rooting parameter");
    Int r = T.r / lambda;
    ModRType out;
    out.graph = T.graph;
    out.contact = coarsen_contact(T.contact, lambda);
    out.r = r;
    for (const auto& [id, m] : T.slope) out.slope[id] = rep_mod(m, r);
    return out;
}

}  // namespace modr
