#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modr/contact.hpp"
#include "modr/graph.hpp"
#include "modr/numeric.hpp"

namespace modr {

// A mod-r tropical type: decorated graph, contact data, rooting parameter and a
// coarse slope residue in {0,...,r-1} per edge, relative to the stored orientation.
struct ModRType {
    DecoratedGraph graph;
    ContactData contact;
    Int r = 1;
    std::map<std::string, Int> slope;
};

// Per-edge derived data: isotropy order t = r/gcd(r, m) (gcd(r,0) = r) and the
// gerby slope in {0,...,t-1} with (r/t)*gerby = m mod r.
struct EdgeDerived {
    Int t = 1;
    Int gerby = 0;
};

// d_v - sum_out m + sum_in m - sum_legs c, reduced mod r. Self-loops contribute 0.
Int balancing_residual(const ModRType& T, const std::string& vertex_id);
bool balanced(const ModRType& T);

struct SolveResult {
    bool feasible = false;
    ModRType type;
};

// Solves the tree-edge slopes from the balancing congruences by iterated leaf
// elimination on the deterministic spanning tree; free assigns every non-tree edge.
// Infeasible only when the final redundant equation fails, which signals
// inconsistent input data (d != sum c_i).
SolveResult solve_weighting(const DecoratedGraph& g, const ContactData& contact, Int r,
                            const std::map<std::string, Int>& free_slopes);

struct WeightingCount {
    Int base = 1;
    Int exp = 0;
    BigInt value() const { return big_pow(base, exp); }
};

struct WeightingEnumeration {
    WeightingCount count;  // always r^{b1}
    bool materialized = false;
    std::vector<ModRType> list;  // lexicographic in the free-slope vector (edge-id order)
};

// Throws BudgetError (carrying the exact count) when materialization is requested
// and r^{b1} exceeds cap.
WeightingEnumeration enumerate_weightings(const DecoratedGraph& g, const ContactData& contact,
                                          Int r, const BigInt& cap, bool materialize = true);

std::map<std::string, EdgeDerived> derive_edge_data(const ModRType& T);

struct Classification {
    bool essential = false;
    bool trivial = false;
    std::vector<std::string> reasons;
};

// Essential: every edge joins an external to an internal vertex and every internal
// vertex has positive genus. Trivial: a single external vertex with no edges.
Classification classify_type(const ModRType& T);
Classification classify_graph(const DecoratedGraph& g, const GraphInvariants& inv);

// Image of a mod-(lambda r) type under the comparison to level r = T.r/lambda:
// slope residues reduce mod r, legs coarsen (s_i/lambda, lambda*a_i).
// DomainError when lambda does not divide some s_i; ArgumentError when lambda | T.r fails.
ModRType weighting_reduce(const ModRType& T, Int lambda);

}  // namespace modr
