#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "modr/contact.hpp"
#include "modr/numeric.hpp"
#include "modr/validation.hpp"

namespace modr {

enum class Cone { External, Internal };

struct Vertex {
    std::string id;
    Int genus = 0;
    Int degree = 0;
    Cone cone = Cone::External;
};

// The stored (source, target) pair is the edge's reference orientation; all slope
// data elsewhere is relative to it. Multi-edges and self-loops allowed.
struct Edge {
    std::string id;
    std::string source;
    std::string target;
};

struct Leg {
    std::string id;
    std::string vertex;
    Int leg_index = 0;  // index into the contact data
};

// A pre-tropical type: connected multigraph with genus, degree and cone labels
// on vertices plus marked legs.
struct DecoratedGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;

    std::size_t vertex_index(const std::string& id) const;  // throws ArgumentError
    std::size_t edge_index(const std::string& id) const;    // throws ArgumentError
    const Vertex& vertex(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    // ids unique and resolvable. Throws ArgumentError on the first defect.
    void check_structure() const;
};

struct SignedEdge {
    std::string edge;
    int sign = 1;  // +1 when the cycle traverses the stored orientation
};

struct GraphInvariants {
    Int b0 = 0;
    Int b1 = 0;
    std::set<std::string> v0;     // external vertices
    std::set<std::string> vplus;  // internal vertices
    std::set<std::string> bipartite_edges;
    Int b0_gamma_dagger = 0;  // components after deleting bipartite edges
    Int b0_gamma0 = 0;        // components of the external subgraph
    Int b1_gammaplus = 0;     // first Betti number of the internal subgraph
    std::set<std::string> spanning_tree;
    // One cycle per non-tree edge (in edge-id order), oriented along that edge.
    std::vector<std::vector<SignedEdge>> cycle_basis;
};

// Throws ConnectivityError for a disconnected graph. Deterministic: the tree grows
// from the smallest vertex id, always through the smallest-id frontier edge.
GraphInvariants compute_invariants(const DecoratedGraph& g);

constexpr Int kWindowVertexCap = 20;

// Checks genus sum, degree sum, the subset degree window |sum_S d_v| < r/2 over all
// S (exhaustive, capped at 20 vertices: BudgetError beyond unless disabled), leg
// bookkeeping, and r > 2d. With exhaustive_window = false the window is approximated
// per-vertex plus total, and the report is flagged partial.
ValidationReport validate_pretype(const DecoratedGraph& g, const ContactData& contact,
                                  Int r, bool exhaustive_window = true);

}  // namespace modr
