#include "modr/pushforward.hpp"

#include "modr/errors.hpp"

namespace modr {

Int pushforward_degree(const FractionalDivisor& D) {
    Int acc = D.integer_part;
    for (const auto& t : D.terms) acc += floor_div(t.coefficient, t.isotropy);
    return acc;
}

Rat exact_degree(const FractionalDivisor& D) {
    Rat acc = D.integer_part;
    for (const auto& t : D.terms) acc += Rat(t.coefficient, t.isotropy);
    return acc;
}

FractionalDivisor external_vertex_divisor(const ModRType& T, const std::string& vertex_id) {
    const auto& v = T.graph.vertex(vertex_id);
    if (v.cone != Cone::External)
        throw DomainError("vertex " + vertex_id + " is internal");

    // outgoing canonical residues at v; self-loops contribute both branches
    std::vector<Int> reps;
    for (const auto& e : T.graph.edges) {
        Int m = rep_mod(T.slope.count(e.id) ? T.slope.at(e.id) : 0, T.r);
        if (e.source == vertex_id) reps.push_back(m);
        if (e.target == vertex_id) reps.push_back(rep_mod(-m, T.r));
    }
    auto cs = coarse_contacts(T.contact, T.r);
    Int legsum = 0;
    FractionalDivisor D;
    for (const auto& l : T.graph.legs) {
        if (l.vertex != vertex_id) continue;
        const auto& leg = T.contact.legs.at(static_cast<std::size_t>(l.leg_index));
        D.terms.push_back({gerby_contact(leg), leg.s});
        legsum += cs.at(static_cast<std::size_t>(l.leg_index));
    }
    if (reps.empty()) {
        // no edge terms: the balancing surplus is already integral
        Int surplus = v.degree - legsum;
        if (rep_mod(surplus, T.r) != 0)
            throw DomainError("balancing fails at vertex " + vertex_id);
        D.integer_part = surplus / T.r;
        return D;
    }
    Int acc = v.degree - legsum;
    for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
        D.terms.push_back({reps[i], T.r});
        acc -= reps[i];
    }
    // last slope eliminated through the balancing congruence
    D.terms.push_back({acc, T.r});
    return D;
}

Int external_vertex_pushdeg(const ModRType& T, const std::string& vertex_id) {
    return pushforward_degree(external_vertex_divisor(T, vertex_id));
}

InducibilityReport inducibility_necessary(const ModRType& T, bool exhaustive_window) {
    InducibilityReport rep;
    auto v = validate_pretype(T.graph, T.contact, T.r, exhaustive_window);
    rep.window_ok = true;
    for (const auto& item : v.items)
        if ((item.name == "subset_window" || item.name == "subset_window_partial") && !item.ok)
            rep.window_ok = false;
    bool all_ok = true;
    for (const auto& vert : T.graph.vertices) {
        if (vert.cone != Cone::External) continue;
        Int deg = external_vertex_pushdeg(T, vert.id);
        rep.pushdeg[vert.id] = deg;
        rep.pushdeg_ok[vert.id] = deg >= 0;
        if (deg < 0) all_ok = false;
    }
    rep.possibly_inducible = rep.window_ok && all_ok;
    return rep;
}

}  // namespace modr
