#pragma once

#include <map>
#include <string>
#include <vector>

#include "modr/compare.hpp"
#include "modr/numeric.hpp"

namespace modr {

// Exact-rational polynomial in the scaling variable, each term tagged with the
// labels of the contributing types.
struct FormalPolynomial {
    std::map<Int, Rat> terms;  // exponent -> coefficient, no zero coefficients
    std::map<Int, std::vector<std::string>> provenance;

    Int degree() const;  // -1 for the zero polynomial
    Rat eval(Int lambda) const;
    void add_term(Int exponent, const Rat& coefficient, const std::string& label);
};

// Sums the sweep monomials C_j * lambda^{k_j} over a family of essential
// constant-slope types. DomainError on a non-essential member; RegimeError naming
// the violated bullet when a member fails the regime at base_r.
FormalPolynomial assemble_family_polynomial(const std::vector<ZhatType>& family,
                                            const std::vector<std::string>& labels,
                                            Int base_r, const std::vector<Int>& lambdas);

// Genus-1 pushforward of the virtual class: the family polynomial with the extra
// degree-1 assertion once a non-trivial essential type is present. DomainError
// unless every member has genus 1.
FormalPolynomial genus1_virtual_polynomial(const std::vector<ZhatType>& types,
                                           const std::vector<std::string>& labels,
                                           Int base_r, const std::vector<Int>& lambdas);

// Total degree of the elliptic-fibration fixture with rooting parameters (r, s):
// obstruction term 1/r + 1/s plus (r^2-1)/r + (s^2-1)/s worth of torsion gerbes,
// with the torsion exponent 2 sourced from the single-internal genus-1 type.
// Always equals r + s; the identity is asserted.
Rat maulik_total_degree(Int r, Int s);

}  // namespace modr
