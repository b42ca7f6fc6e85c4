#include "modr/compare.hpp"

#include <algorithm>
#include <unordered_map>

#include "modr/errors.hpp"

namespace modr {

namespace {

std::unordered_map<std::string, Int> leg_sums(const DecoratedGraph& g,
                                              const ContactData& contact, Int r) {
    auto cs = coarse_contacts(contact, r);
    std::unordered_map<std::string, Int> out;
    for (const auto& l : g.legs)
        out[l.vertex] += cs.at(static_cast<std::size_t>(l.leg_index));
    return out;
}

Int z_residual(const ZhatType& Z, const std::string& vertex_id, Int base_r) {
    const auto& v = Z.graph.vertex(vertex_id);
    Int acc = v.degree;
    auto cs = coarse_contacts(Z.contact, base_r);
    for (const auto& e : Z.graph.edges) {
        if (e.source == e.target) continue;
        Int m = Z.islope.count(e.id) ? Z.islope.at(e.id) : 0;
        if (e.source == vertex_id) acc -= m;
        if (e.target == vertex_id) acc += m;
    }
    for (const auto& l : Z.graph.legs)
        if (l.vertex == vertex_id) acc -= cs.at(static_cast<std::size_t>(l.leg_index));
    return acc;
}

}  // namespace

bool z_balanced(const ZhatType& Z, Int base_r) {
    for (const auto& v : Z.graph.vertices)
        if (z_residual(Z, v.id, base_r) != 0) return false;
    return true;
}

ModRType zhat_reduce(const ZhatType& Z, Int base_r, Int lambda) {
    if (lambda <= 0) throw DomainError("lambda must be positive");
    ModRType T;
    T.graph = Z.graph;
    T.contact = scale_contact(Z.contact, base_r, lambda);
    T.r = base_r * lambda;
    for (const auto& [id, m] : Z.islope) T.slope[id] = rep_mod(m, T.r);
    return T;
}

std::map<std::string, AgeClass> age_classify(const ZhatType& Z) {
    std::map<std::string, AgeClass> out;
    for (const auto& e : Z.graph.edges) {
        Int m = Z.islope.count(e.id) ? Z.islope.at(e.id) : 0;
        out[e.id] = m > 0 ? AgeClass::SmallAge : (m < 0 ? AgeClass::LargeAge : AgeClass::Zero);
    }
    return out;
}

std::map<std::string, Int> canonical_islopes(const ModRType& T) {
    auto inv = compute_invariants(T.graph);
    std::map<std::string, Int> out;
    for (const auto& e : T.graph.edges) {
        Int m = rep_mod(T.slope.count(e.id) ? T.slope.at(e.id) : 0, T.r);
        bool flip = false;
        if (inv.bipartite_edges.count(e.id)) {
            // lift the residue seen from the external side
            flip = T.graph.vertex(e.source).cone == Cone::Internal;
        }
        out[e.id] = flip ? -rep_mod(-m, T.r) : m;
    }
    return out;
}

namespace {

struct SizeBound {
    bool vacuous = true;
    Int bound = 0;
};

SizeBound lift_size_bound(const ModRType& T, const std::map<std::string, Int>& islope) {
    SizeBound sb;
    auto ls = leg_sums(T.graph, T.contact, T.r);
    for (const auto& v : T.graph.vertices) {
        if (v.cone != Cone::External) continue;
        Int legs = ls.count(v.id) ? ls.at(v.id) : 0;
        for (const auto& e : T.graph.edges) {
            Int m = islope.at(e.id);
            // representative of the slope oriented out of v
            if (e.source == v.id) {
                Int val = v.degree - rep_mod(m, T.r) + legs;
                if (sb.vacuous || val > sb.bound) sb.bound = val;
                sb.vacuous = false;
            }
            if (e.target == v.id) {
                Int val = v.degree - rep_mod(-m, T.r) + legs;
                if (sb.vacuous || val > sb.bound) sb.bound = val;
                sb.vacuous = false;
            }
        }
    }
    return sb;
}

bool lift_balances(const ModRType& T, const std::map<std::string, Int>& islope, Int level) {
    auto ls = leg_sums(T.graph, T.contact, T.r);  // coarse contacts are level-independent
    for (const auto& v : T.graph.vertices) {
        Int acc = v.degree;
        if (ls.count(v.id)) acc -= ls.at(v.id);
        for (const auto& e : T.graph.edges) {
            if (e.source == e.target) continue;
            Int m = islope.at(e.id);
            if (e.source == v.id) acc -= m;
            if (e.target == v.id) acc += m;
        }
        if (rep_mod(acc, level) != 0) return false;
    }
    return true;
}

}  // namespace

LiftResult canonical_lift(const ModRType& T, Int lambda) {
    if (lambda <= 0) throw DomainError("lambda must be positive");
    LiftResult res;
    auto islope = canonical_islopes(T);
    auto sb = lift_size_bound(T, islope);
    res.size_vacuous = sb.vacuous;
    res.size_bound = sb.bound;
    res.size_ok = sb.vacuous || T.r > sb.bound;

    if (!lift_balances(T, islope, T.r * lambda)) return res;
    res.found = true;
    res.lifted.graph = T.graph;
    res.lifted.contact = scale_contact(T.contact, T.r, lambda);
    res.lifted.r = T.r * lambda;
    for (const auto& [id, m] : islope) res.lifted.slope[id] = rep_mod(m, res.lifted.r);
    return res;
}

FamilyLiftResult canonical_lift_family(const ModRType& T, const std::vector<Int>& lambdas) {
    FamilyLiftResult res;
    auto islope = canonical_islopes(T);
    auto sb = lift_size_bound(T, islope);
    res.size_ok = sb.vacuous || T.r > sb.bound;
    for (Int lam : lambdas)
        if (!lift_balances(T, islope, T.r * lam)) return res;
    // constant families must balance exactly over the integers
    ZhatType Z{T.graph, T.contact, islope};
    if (!z_balanced(Z, T.r)) return res;
    res.found = true;
    res.zhat = std::move(Z);
    return res;
}

Int jac_torsion_exponent(const DecoratedGraph& g, const GraphInvariants& inv) {
    Int gsum = 0;
    for (const auto& v : g.vertices)
        if (v.cone == Cone::Internal) gsum += v.genus;
    return static_cast<Int>(inv.bipartite_edges.size()) - inv.b0_gamma_dagger + 1 +
           inv.b1_gammaplus + 2 * gsum;
}

Int jac_torsion_exponent(const ModRType& T) {
    return jac_torsion_exponent(T.graph, compute_invariants(T.graph));
}

KTauResult k_tau_graph(const DecoratedGraph& g, const GraphInvariants& inv, Int genus) {
    auto cls = classify_graph(g, inv);
    if (!cls.essential) throw DomainError("k_tau requires an essential type");
    Int gplus = 0;
    bool external_genus_zero = true;
    for (const auto& v : g.vertices) {
        if (v.cone == Cone::Internal)
            gplus += v.genus;
        else if (v.genus != 0)
            external_genus_zero = false;
    }
    KTauResult res;
    res.k = inv.b1 + 2 * gplus - static_cast<Int>(inv.vplus.size());
    res.bound = std::max(2 * genus - 1, Int(0));
    if (res.k < 0 || res.k > res.bound)
        throw Error("k_tau out of bounds: k = " + std::to_string(res.k));
    res.at_upper_bound = genus > 0 && res.k == 2 * genus - 1;
    res.single_internal_star =
        inv.b1 == 0 && inv.vplus.size() == 1 && external_genus_zero;
    return res;
}

KTauResult k_tau(const ModRType& T) {
    return k_tau_graph(T.graph, compute_invariants(T.graph), T.contact.g);
}

KTauResult k_tau(const ZhatType& Z) {
    return k_tau_graph(Z.graph, compute_invariants(Z.graph), Z.contact.g);
}

RegimeReport regime_check(const ModRType& T) {
    RegimeReport rep;
    auto islope = canonical_islopes(T);
    auto sb = lift_size_bound(T, islope);
    rep.large_bound = sb.bound;
    rep.large = sb.vacuous || T.r > sb.bound;
    rep.divisible = true;
    rep.nodal_nontrivial = true;
    for (const auto& e : T.graph.edges) {
        Int m = rep_mod(T.slope.count(e.id) ? T.slope.at(e.id) : 0, T.r);
        if (m == 0) {
            rep.nodal_nontrivial = false;
            continue;  // slope 0 is the untwisted case; divisibility is about lifts
        }
        if (T.r % m != 0) rep.divisible = false;
    }
    return rep;
}

DegreeMonomial comparison_degree(const ModRType& big, Int lambda) {
    if (lambda <= 0) throw DomainError("lambda must be positive");
    if (big.r % lambda != 0)
        throw ArgumentError("lambda does not divide the rooting parameter");
    auto reduced = weighting_reduce(big, lambda);
    auto inv = compute_invariants(big.graph);

    DegreeMonomial res;
    res.coefficient = Rat(sh_order(reduced), sh_order(big));
    Int torsion = jac_torsion_exponent(big.graph, inv);
    Int eps = inv.v0.empty() ? 1 : 0;
    Int scaling = inv.v0.empty() ? 0 : inv.b0_gamma0 - 1;
    res.exponent_raw = torsion - eps;
    res.exponent = torsion - eps + scaling;

    auto cls = classify_graph(big.graph, inv);
    auto regime = regime_check(big);
    if (cls.essential && regime.ok()) {
        auto kt = k_tau_graph(big.graph, inv, big.contact.g);
        // the symbolic total degree: sh-ratio decays as lambda^{-(|E|-b1)}
        Int total_deg = res.exponent - (static_cast<Int>(big.graph.edges.size()) - inv.b1);
        res.regime_certified = total_deg == kt.k;
    }
    return res;
}

SweepReport monomiality_sweep(const ZhatType& Z, Int base_r, const std::vector<Int>& lambdas) {
    if (lambdas.empty()) throw ArgumentError("empty lambda list");
    if (!z_balanced(Z, base_r)) throw DomainError("integer slopes do not balance");
    SweepReport rep;
    rep.k = k_tau(Z).k;
    rep.regime_ok = regime_check(zhat_reduce(Z, base_r, 1)).ok();
    for (Int lam : lambdas) {
        auto big = zhat_reduce(Z, base_r, lam);
        if (!balanced(big)) throw DomainError("reduction fails balancing at lambda");
        auto d = comparison_degree(big, lam);
        rep.samples.push_back({lam, d.total(lam), d.total_raw(lam)});
    }
    rep.constant = rep.samples.front().total / rat_pow(Rat(lambdas.front()), rep.k);
    rep.monomial = true;
    for (const auto& s : rep.samples)
        if (s.total != rep.constant * rat_pow(Rat(s.lambda), rep.k)) rep.monomial = false;
    return rep;
}

Int dim_stratum_graph(const DecoratedGraph& g, const GraphInvariants& inv, Int genus, Int n) {
    Int gplus = 0;
    for (const auto& v : g.vertices)
        if (v.cone == Cone::Internal) gplus += v.genus;
    return 3 * genus - 3 + n + inv.b0_gamma0 - static_cast<Int>(g.edges.size()) +
           static_cast<Int>(inv.bipartite_edges.size()) - inv.b0_gamma_dagger +
           inv.b1_gammaplus + gplus;
}

Int dim_stratum(const ModRType& T) {
    return dim_stratum_graph(T.graph, compute_invariants(T.graph), T.contact.g,
                             T.contact.n());
}

Trichotomy equidimensionality_report(Int g, Int n, const std::vector<ModRType>& types) {
    Trichotomy tri;
    tri.g = g;
    tri.n = n;
    for (const auto& T : types) {
        if (T.contact.g != g || T.contact.n() != n)
            throw ArgumentError("types with mixed (g, n)");
        auto inv = compute_invariants(T.graph);
        auto cls = classify_graph(T.graph, inv);
        if (!cls.essential) throw DomainError("non-essential type");
        tri.dims.push_back(dim_stratum_graph(T.graph, inv, g, n));
    }
    Int main_dim = 3 * g - 3 + n;
    tri.max_dim = tri.dims.empty() ? main_dim : *std::max_element(tri.dims.begin(), tri.dims.end());
    tri.excess = tri.max_dim - main_dim;
    tri.equidimensional =
        std::all_of(tri.dims.begin(), tri.dims.end(), [&](Int d) { return d == tri.dims.front(); });
    tri.expected_dim = g == 1 ? n : main_dim;
    return tri;
}

}  // namespace modr
