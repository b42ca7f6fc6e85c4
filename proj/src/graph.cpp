#include "modr/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "modr/errors.hpp"

namespace modr {

namespace {

std::unordered_map<std::string, std::size_t> index_of_vertices(const DecoratedGraph& g) {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) m[g.vertices[i].id] = i;
    return m;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    Int components(std::size_t n) {
        std::unordered_set<std::size_t> roots;
        for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
        return static_cast<Int>(roots.size());
    }
};

}  // namespace

std::size_t DecoratedGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return i;
    throw ArgumentError("unknown vertex id: " + id);
}

std::size_t DecoratedGraph::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return i;
    throw ArgumentError("unknown edge id: " + id);
}

const Vertex& DecoratedGraph::vertex(const std::string& id) const {
    return vertices[vertex_index(id)];
}

const Edge& DecoratedGraph::edge(const std::string& id) const {
    return edges[edge_index(id)];
}

void DecoratedGraph::check_structure() const {
    std::unordered_set<std::string> vids, eids, lids;
    for (const auto& v : vertices)
        if (!vids.insert(v.id).second) throw ArgumentError("duplicate vertex id: " + v.id);
    for (const auto& e : edges) {
        if (!eids.insert(e.id).second) throw ArgumentError("duplicate edge id: " + e.id);
        if (!vids.count(e.source)) throw ArgumentError("edge " + e.id + ": unknown source " + e.source);
        if (!vids.count(e.target)) throw ArgumentError("edge " + e.id + ": unknown target " + e.target);
    }
    for (const auto& l : legs) {
        if (!lids.insert(l.id).second) throw ArgumentError("duplicate leg id: " + l.id);
        if (!vids.count(l.vertex)) throw ArgumentError("leg " + l.id + ": unknown vertex " + l.vertex);
    }
}

GraphInvariants compute_invariants(const DecoratedGraph& g) {
    g.check_structure();
    GraphInvariants inv;
    const std::size_t nv = g.vertices.size();
    auto vidx = index_of_vertices(g);

    UnionFind whole(nv);
    for (const auto& e : g.edges) whole.unite(vidx.at(e.source), vidx.at(e.target));
    inv.b0 = nv == 0 ? 0 : whole.components(nv);
    if (inv.b0 != 1) throw ConnectivityError("graph is not connected");
    inv.b1 = static_cast<Int>(g.edges.size()) - static_cast<Int>(nv) + inv.b0;

    for (const auto& v : g.vertices)
        (v.cone == Cone::External ? inv.v0 : inv.vplus).insert(v.id);

    for (const auto& e : g.edges) {
        Cone cs = g.vertices[vidx.at(e.source)].cone;
        Cone ct = g.vertices[vidx.at(e.target)].cone;
        if (cs != ct) inv.bipartite_edges.insert(e.id);
    }

    UnionFind dagger(nv);
    for (const auto& e : g.edges)
        if (!inv.bipartite_edges.count(e.id)) dagger.unite(vidx.at(e.source), vidx.at(e.target));
    inv.b0_gamma_dagger = whole.components(nv) == 0 ? 0 : dagger.components(nv);

    // external subgraph
    {
        std::vector<std::size_t> ext;
        std::unordered_map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < nv; ++i)
            if (g.vertices[i].cone == Cone::External) {
                pos[i] = ext.size();
                ext.push_back(i);
            }
        UnionFind uf(ext.size());
        for (const auto& e : g.edges) {
            std::size_t a = vidx.at(e.source), b = vidx.at(e.target);
            if (pos.count(a) && pos.count(b)) uf.unite(pos[a], pos[b]);
        }
        inv.b0_gamma0 = ext.empty() ? 0 : uf.components(ext.size());
    }

    // internal subgraph
    {
        std::vector<std::size_t> in;
        std::unordered_map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < nv; ++i)
            if (g.vertices[i].cone == Cone::Internal) {
                pos[i] = in.size();
                in.push_back(i);
            }
        UnionFind uf(in.size());
        Int ne = 0;
        for (const auto& e : g.edges) {
            std::size_t a = vidx.at(e.source), b = vidx.at(e.target);
            if (pos.count(a) && pos.count(b)) {
                uf.unite(pos[a], pos[b]);
                ++ne;
            }
        }
        Int b0p = in.empty() ? 0 : uf.components(in.size());
        inv.b1_gammaplus = in.empty() ? 0 : ne - static_cast<Int>(in.size()) + b0p;
    }

    // spanning tree: grow from the smallest vertex id through the smallest-id edge
    // with exactly one visited endpoint
    if (nv > 0) {
        std::size_t start = 0;
        for (std::size_t i = 1; i < nv; ++i)
            if (g.vertices[i].id < g.vertices[start].id) start = i;
        std::vector<bool> visited(nv, false);
        visited[start] = true;
        std::size_t nvis = 1;
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < g.edges.size(); ++i) order.push_back(i);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return g.edges[a].id < g.edges[b].id;
        });
        while (nvis < nv) {
            bool grew = false;
            for (std::size_t k : order) {
                const auto& e = g.edges[k];
                std::size_t a = vidx.at(e.source), b = vidx.at(e.target);
                if (visited[a] == visited[b]) continue;
                inv.spanning_tree.insert(e.id);
                visited[a] = visited[b] = true;
                ++nvis;
                grew = true;
                break;
            }
            if (!grew) throw ConnectivityError("graph is not connected");
        }
    }

    // cycle basis: one cycle per non-tree edge, traversed along the stored
    // orientation of that edge, closed up through the unique tree path
    {
        // tree adjacency
        std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> adj;
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
            const auto& e = g.edges[k];
            if (!inv.spanning_tree.count(e.id)) continue;
            std::size_t a = vidx.at(e.source), b = vidx.at(e.target);
            adj[a].push_back({b, k});
            adj[b].push_back({a, k});
        }
        auto tree_path = [&](std::size_t from, std::size_t to) {
            // returns signed edges walking from -> to inside the tree
            std::vector<std::vector<SignedEdge>> paths(nv);
            std::vector<bool> seen(nv, false);
            std::vector<std::size_t> stack{from};
            seen[from] = true;
            while (!stack.empty()) {
                std::size_t u = stack.back();
                stack.pop_back();
                if (u == to) break;
                for (auto [w, k] : adj[u]) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    paths[w] = paths[u];
                    const auto& e = g.edges[k];
                    int sign = (vidx.at(e.source) == u) ? 1 : -1;
                    paths[w].push_back({e.id, sign});
                    stack.push_back(w);
                }
            }
            return paths[to];
        };

        std::vector<std::size_t> nontree;
        for (std::size_t k = 0; k < g.edges.size(); ++k)
            if (!inv.spanning_tree.count(g.edges[k].id)) nontree.push_back(k);
        std::sort(nontree.begin(), nontree.end(), [&](std::size_t a, std::size_t b) {
            return g.edges[a].id < g.edges[b].id;
        });
        for (std::size_t k : nontree) {
            const auto& e = g.edges[k];
            std::vector<SignedEdge> cycle{{e.id, 1}};
            std::size_t a = vidx.at(e.source), b = vidx.at(e.target);
            if (a != b) {
                auto back = tree_path(b, a);
                cycle.insert(cycle.end(), back.begin(), back.end());
            }
            inv.cycle_basis.push_back(std::move(cycle));
        }
    }

    return inv;
}

ValidationReport validate_pretype(const DecoratedGraph& g, const ContactData& contact,
                                  Int r, bool exhaustive_window) {
    ValidationReport rep;
    try {
        g.check_structure();
        rep.add("structure", true);
    } catch (const ArgumentError& e) {
        rep.add("structure", false, e.what());
        return rep;
    }

    const std::size_t nv = g.vertices.size();
    auto vidx = index_of_vertices(g);
    UnionFind uf(nv);
    for (const auto& e : g.edges) uf.unite(vidx.at(e.source), vidx.at(e.target));
    Int b0 = nv == 0 ? 0 : uf.components(nv);
    rep.add("connected", b0 == 1);
    Int b1 = static_cast<Int>(g.edges.size()) - static_cast<Int>(nv) + b0;

    Int gsum = 0, dsum = 0;
    for (const auto& v : g.vertices) {
        gsum += v.genus;
        dsum += v.degree;
    }
    rep.add("genus_sum", gsum + b1 == contact.g,
            "sum g_v + b1 = " + std::to_string(gsum + b1) + ", g = " + std::to_string(contact.g));
    rep.add("degree_sum", dsum == contact.d,
            "sum d_v = " + std::to_string(dsum) + ", d = " + std::to_string(contact.d));

    // legs: count matches n, every leg_index in [0, n) used exactly once
    {
        bool ok = static_cast<Int>(g.legs.size()) == contact.n();
        std::vector<Int> used(contact.legs.size(), 0);
        for (const auto& l : g.legs) {
            if (l.leg_index < 0 || l.leg_index >= contact.n()) {
                ok = false;
                break;
            }
            ++used[static_cast<std::size_t>(l.leg_index)];
        }
        for (Int u : used)
            if (u != 1) ok = false;
        rep.add("leg_indices", ok, "each contact leg must be attached exactly once");
    }

    // subset degree window: |sum_S d_v| < r/2 for every S
    if (exhaustive_window) {
        if (nv > static_cast<std::size_t>(kWindowVertexCap))
            throw BudgetError("subset window check over 2^" + std::to_string(nv) +
                                  " subsets exceeds the vertex cap",
                              big_to_string(big_pow(2, static_cast<Int>(nv))));
        bool ok = true;
        Int witness = 0;
        std::vector<Int> degs;
        for (const auto& v : g.vertices) degs.push_back(v.degree);
        // Gray-code walk: flip one membership bit per step
        std::vector<bool> in(nv, false);
        Int sum = 0;
        const unsigned long long total = 1ull << nv;
        for (unsigned long long i = 1; i < total && ok; ++i) {
            unsigned long long gray_prev = (i - 1) ^ ((i - 1) >> 1);
            unsigned long long gray = i ^ (i >> 1);
            unsigned long long bit = gray ^ gray_prev;
            int pos = __builtin_ctzll(bit);
            if (in[pos]) {
                sum -= degs[pos];
                in[pos] = false;
            } else {
                sum += degs[pos];
                in[pos] = true;
            }
            if (2 * sum >= r || 2 * sum <= -r) {
                ok = false;
                witness = sum;
            }
        }
        rep.add("subset_window", ok,
                ok ? "" : "subset with degree sum " + std::to_string(witness) +
                              " violates |sum| < r/2");
    } else {
        bool ok = true;
        for (const auto& v : g.vertices)
            if (2 * v.degree >= r || 2 * v.degree <= -r) ok = false;
        if (2 * dsum >= r || 2 * dsum <= -r) ok = false;
        rep.add("subset_window_partial", ok, "per-vertex and total window only");
        rep.partial = true;
    }

    rep.add("size_r_gt_2d", r > 2 * contact.d, "need r > 2d");
    return rep;
}

}  // namespace modr
