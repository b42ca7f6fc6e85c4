#include "modr/polynomial.hpp"

#include <algorithm>

#include "modr/errors.hpp"

namespace modr {

Int FormalPolynomial::degree() const {
    return terms.empty() ? -1 : terms.rbegin()->first;
}

Rat FormalPolynomial::eval(Int lambda) const {
    Rat acc = 0;
    for (const auto& [k, c] : terms) acc += c * rat_pow(Rat(lambda), k);
    return acc;
}

void FormalPolynomial::add_term(Int exponent, const Rat& coefficient, const std::string& label) {
    if (coefficient == 0) return;
    terms[exponent] += coefficient;
    provenance[exponent].push_back(label);
    if (terms[exponent] == 0) {
        terms.erase(exponent);
        provenance.erase(exponent);
    }
}

FormalPolynomial assemble_family_polynomial(const std::vector<ZhatType>& family,
                                            const std::vector<std::string>& labels,
                                            Int base_r, const std::vector<Int>& lambdas) {
    if (!labels.empty() && labels.size() != family.size())
        throw ArgumentError("label count does not match family size");
    FormalPolynomial P;
    Int genus = family.empty() ? 0 : family.front().contact.g;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& Z = family[i];
        std::string label = labels.empty() ? "type" + std::to_string(i) : labels[i];
        auto base = zhat_reduce(Z, base_r, 1);
        auto cls = classify_type(base);
        if (!cls.essential)
            throw DomainError("family member " + label + " is not essential");
        auto regime = regime_check(base);
        if (!regime.large)
            throw RegimeError("member " + label + ": r is not sufficiently large");
        if (!regime.divisible)
            throw RegimeError("member " + label + ": r is not sufficiently divisible");
        if (!regime.nodal_nontrivial)
            throw RegimeError("member " + label + ": nodal contacts are trivial");

        auto sweep = monomiality_sweep(Z, base_r, lambdas);
        if (!sweep.monomial)
            throw DomainError("member " + label + ": degree samples are not monomial");
        P.add_term(sweep.k, sweep.constant, label);

        // constant terms come from trivial types only
        if ((sweep.k == 0) != cls.trivial)
            throw Error("constant-term provenance violated by " + label);
    }
    Int maxdeg = std::max(2 * genus - 1, Int(0));
    if (P.degree() > maxdeg)
        throw Error("assembled degree exceeds max(2g-1, 0)");
    return P;
}

FormalPolynomial genus1_virtual_polynomial(const std::vector<ZhatType>& types,
                                           const std::vector<std::string>& labels,
                                           Int base_r, const std::vector<Int>& lambdas) {
    bool nontrivial = false;
    for (const auto& Z : types) {
        if (Z.contact.g != 1) throw DomainError("virtual polynomial requires genus 1");
        auto cls = classify_type(zhat_reduce(Z, base_r, 1));
        if (!cls.trivial) nontrivial = true;
    }
    auto Q = assemble_family_polynomial(types, labels, base_r, lambdas);
    if (nontrivial && Q.degree() != 1)
        throw Error("genus-1 polynomial degree is not 1");
    return Q;
}

Rat maulik_total_degree(Int r, Int s) {
    if (r < 1 || s < 1) throw DomainError("rooting parameters must be positive");
    // single internal genus-1 vertex, no legs
    DecoratedGraph g;
    g.vertices.push_back({"v", 1, 0, Cone::Internal});
    ContactData contact;
    contact.d = 0;
    contact.g = 1;
    Int e = jac_torsion_exponent(g, compute_invariants(g));
    if (e != 2) throw Error("torsion exponent of the internal genus-1 type is not 2");
    Rat total = Rat(1, r) + Rat(1, s);
    total += Rat(big_pow(r, e) - 1, BigInt(r));
    total += Rat(big_pow(s, e) - 1, BigInt(s));
    if (total != Rat(r + s)) throw Error("total degree does not equal r + s");
    return total;
}

}  // namespace modr
