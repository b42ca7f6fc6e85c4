#include "modr/shadow.hpp"

#include <algorithm>
#include <unordered_map>

#include "modr/errors.hpp"

namespace modr {

namespace {

std::vector<std::string> sorted_edge_ids(const DecoratedGraph& g) {
    std::vector<std::string> ids;
    for (const auto& e : g.edges) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

ShSystem build_sh_system(const ModRType& T) {
    ShSystem sys;
    sys.r = T.r;
    auto derived = derive_edge_data(T);
    for (const auto& [id, d] : derived) sys.moduli[id] = d.t;
    auto inv = compute_invariants(T.graph);
    for (const auto& cycle : inv.cycle_basis) {
        std::vector<ShTerm> eq;
        for (const auto& se : cycle) {
            Int t = derived.at(se.edge).t;
            eq.push_back({se.edge, se.sign, T.r / t});
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

CongruenceSystem sh_congruences(const ShSystem& sys) {
    CongruenceSystem c;
    c.modulus = sys.r;
    std::vector<std::string> ids;
    for (const auto& [id, t] : sys.moduli) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        pos[ids[i]] = i;
        c.radices.push_back(sys.moduli.at(ids[i]));
    }
    for (const auto& eq : sys.equations) {
        CongruenceSystem::Row row;
        for (const auto& term : eq)
            row.terms.push_back({pos.at(term.edge), term.sign * term.coeff});
        c.rows.push_back(std::move(row));
    }
    return c;
}

std::vector<BigInt> elementary_divisors(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<BigInt> divisors;
    std::size_t k = 0;
    while (k < rows && k < cols) {
        // locate the minimal nonzero entry of the trailing submatrix
        std::size_t pi = k, pj = k;
        bool found = false;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (!found || abs(m[i][j]) < abs(m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(m[k], m[pi]);
        for (std::size_t i = k; i < rows; ++i) std::swap(m[i][k], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                BigInt q = m[i][k] / m[k][k];
                for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) {
                    std::swap(m[k], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                BigInt q = m[k][j] / m[k][k];
                for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) {
                    for (std::size_t i = k; i < rows; ++i) std::swap(m[i][k], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                for (std::size_t i = k + 1; i < rows && clean; ++i)
                    for (std::size_t j = k + 1; j < cols && clean; ++j)
                        if (m[i][j] % m[k][k] != 0) {
                            for (std::size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
                            clean = false;
                        }
            }
        }
        divisors.push_back(abs(m[k][k]));
        ++k;
    }
    return divisors;
}

namespace {

BigInt lattice_count(const std::vector<Int>& radices,
                     const std::vector<CongruenceSystem::Row>& rows, Int modulus) {
    // solutions of rows over prod Z/radices with all rows homogeneous mod modulus
    BigInt space = 1;
    for (Int t : radices) space *= t;
    const std::size_t b = rows.size();
    if (b == 0) return space;
    std::vector<std::vector<BigInt>> m(b, std::vector<BigInt>(radices.size() + b, 0));
    for (std::size_t k = 0; k < b; ++k) {
        for (auto [pos, c] : rows[k].terms) m[k][pos] += c;
        m[k][radices.size() + k] = modulus;
    }
    auto divs = elementary_divisors(std::move(m));
    BigInt idx = 1;
    for (const auto& d : divs) idx *= d;
    BigInt num = space * idx;
    BigInt den = 1;
    for (std::size_t k = 0; k < b; ++k) den *= modulus;
    if (num % den != 0) throw Error("lattice index count is not integral");
    return num / den;
}

}  // namespace

BigInt sh_order(const ShSystem& sys) {
    auto c = sh_congruences(sys);
    return lattice_count(c.radices, c.rows, c.modulus);
}

BigInt sh_order(const ModRType& T) { return sh_order(build_sh_system(T)); }

std::vector<std::vector<Int>> sh_enumerate(const ModRType& T, const BigInt& cap) {
    auto c = sh_congruences(build_sh_system(T));
    return scan_solutions_parallel(c, cap);
}

KernelResult reduction_kernel_order(const ModRType& big, Int lambda) {
    if (lambda <= 0) throw DomainError("lambda must be positive");
    if (big.r % lambda != 0) throw ArgumentError("lambda does not divide the rooting parameter");
    const Int r = big.r / lambda;
    auto reduced = weighting_reduce(big, lambda);
    auto d_big = derive_edge_data(big);
    auto d_red = derive_edge_data(reduced);
    auto inv = compute_invariants(big.graph);

    KernelResult res;
    res.regime = true;
    for (const auto& e : big.graph.edges) {
        Int w = rep_mod(big.slope.count(e.id) ? big.slope.at(e.id) : 0, big.r);
        if (w == 0 || w > r || r % w != 0) res.regime = false;
    }

    auto ids = sorted_edge_ids(big.graph);
    bool divisible = true;
    for (const auto& id : ids)
        if (d_big.at(id).t % d_red.at(id).t != 0) divisible = false;

    if (divisible) {
        // substitute a_e = t_e(r) * b_e and count the transformed system exactly
        std::vector<Int> radices;
        std::unordered_map<std::string, std::size_t> pos;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            pos[ids[i]] = i;
            radices.push_back(d_big.at(ids[i]).t / d_red.at(ids[i]).t);
        }
        auto sys = build_sh_system(big);
        std::vector<CongruenceSystem::Row> rows;
        for (const auto& eq : sys.equations) {
            CongruenceSystem::Row row;
            for (const auto& term : eq)
                row.terms.push_back({pos.at(term.edge),
                                     term.sign * term.coeff * d_red.at(term.edge).t});
            rows.push_back(std::move(row));
        }
        res.order = lattice_count(radices, rows, big.r);
    } else {
        auto sols = sh_enumerate(big, BigInt(1) << 21);
        BigInt cnt = 0;
        for (const auto& a : sols) {
            bool in_kernel = true;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (a[i] % d_red.at(ids[i]).t != 0) in_kernel = false;
            if (in_kernel) ++cnt;
        }
        res.order = cnt;
    }

    if (res.regime) {
        Int tree_edges = static_cast<Int>(big.graph.edges.size()) - inv.b1;
        res.claim_value = big_pow(lambda, tree_edges);
        res.claim_holds = res.order == res.claim_value;
        res.claim_checked = true;
    }
    return res;
}

}  // namespace modr
