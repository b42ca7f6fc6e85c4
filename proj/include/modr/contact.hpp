#pragma once

#include <vector>

#include "modr/numeric.hpp"
#include "modr/validation.hpp"

namespace modr {

// One marked leg: source rooting parameter s and age a with a*s integral, a in [0,1).
struct ContactLeg {
    Int s = 1;
    Rat a = 0;
};

// Discrete contact data: per-leg (s_i, a_i), coarse degree d, genus g.
struct ContactData {
    std::vector<ContactLeg> legs;
    Int d = 0;
    Int g = 0;

    Int n() const { return static_cast<Int>(legs.size()); }
};

// Coarse contact order c_i = r * a_i. Throws DomainError if not a nonnegative integer.
Int coarse_contact(const ContactLeg& leg, Int r);
std::vector<Int> coarse_contacts(const ContactData& contact, Int r);

// Gerby contact order s_i * a_i. Throws DomainError if not integral.
Int gerby_contact(const ContactLeg& leg);

// Checks, per leg: c_i integral, s_i | r, r | c_i s_i, r/gcd(r,c_i) = s_i, a_i in [0,1)
// with a_i s_i integral; globally r > max c_i, d = sum c_i, r > 2d.
// Violations are reported, never thrown.
ValidationReport validate_contact(const ContactData& contact, Int r);

// Rescale to rooting parameter lambda*r: s_i' = lambda*s_i, a_i' = a_i/lambda,
// d and g unchanged. Coarse contact orders are preserved. Throws DomainError for lambda = 0.
ContactData scale_contact(const ContactData& contact, Int r, Int lambda);

// Inverse-direction coarsening used when reducing a mod-(lambda r) type to level r:
// s_i' = s_i/lambda (DomainError unless lambda | s_i), a_i' = lambda*a_i.
ContactData coarsen_contact(const ContactData& contact, Int lambda);

}  // namespace modr
