#include "modr/contact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "modr/errors.hpp"

namespace modr {

namespace {

bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int to_int(const Rat& q) {
    BigInt n = numerator(q);
    return static_cast<Int>(n);
}

}  // namespace

Int coarse_contact(const ContactLeg& leg, Int r) {
    Rat c = leg.a * r;
    if (!is_integer(c) || c < 0)
        throw DomainError("coarse contact order r*a is not a nonnegative integer");
    return to_int(c);
}

std::vector<Int> coarse_contacts(const ContactData& contact, Int r) {
    std::vector<Int> out;
    out.reserve(contact.legs.size());
    for (const auto& leg : contact.legs) out.push_back(coarse_contact(leg, r));
    return out;
}

Int gerby_contact(const ContactLeg& leg) {
    Rat c = leg.a * leg.s;
    if (!is_integer(c) || c < 0)
        throw DomainError("gerby contact order s*a is not a nonnegative integer");
    return to_int(c);
}

ValidationReport validate_contact(const ContactData& contact, Int r) {
    ValidationReport rep;
    if (r < 1) {
        rep.add("rooting_parameter", false, "r must be >= 1");
        return rep;
    }

    Int csum = 0;
    Int cmax = 0;
    for (std::size_t i = 0; i < contact.legs.size(); ++i) {
        const auto& leg = contact.legs[i];
        const std::string tag = "leg[" + std::to_string(i) + "] ";

        bool s_pos = leg.s >= 1;
        rep.add(tag + "s_positive", s_pos);
        if (!s_pos) continue;

        bool age_range = leg.a >= 0 && leg.a < 1;
        rep.add(tag + "age_in_[0,1)", age_range);
        bool age_lattice = is_integer(leg.a * leg.s);
        rep.add(tag + "age_in_(1/s)Z", age_lattice, "s*a must be an integer");

        Rat crat = leg.a * r;
        bool c_int = is_integer(crat) && crat >= 0;
        rep.add(tag + "coarse_contact_integral", c_int, "r*a must be a nonnegative integer");
        if (!c_int) continue;
        Int c = to_int(crat);
        csum += c;
        if (c > cmax) cmax = c;

        rep.add(tag + "s_divides_r", r % leg.s == 0);
        rep.add(tag + "r_divides_cs", (BigInt(c) * leg.s) % r == 0);
        Int g = gcd_nonneg(r, c);
        if (g == 0) g = r;  // c = 0
        rep.add(tag + "coprimality", r / g == leg.s,
                "r/gcd(r,c) = " + std::to_string(r / g) + ", s = " + std::to_string(leg.s));
    }

    rep.add("size_r_gt_max_contact", contact.legs.empty() || r > cmax,
            "need r > max c_i");
    rep.add("degree_is_contact_sum", contact.d == csum,
            "d = " + std::to_string(contact.d) + ", sum c_i = " + std::to_string(csum));
    rep.add("size_r_gt_2d", r > 2 * contact.d, "need r > 2d");
    return rep;
}

ContactData scale_contact(const ContactData& contact, Int /*r*/, Int lambda) {
    if (lambda <= 0) throw DomainError("scaling parameter lambda must be positive");
    ContactData out;
    out.d = contact.d;
    out.g = contact.g;
    out.legs.reserve(contact.legs.size());
    for (const auto& leg : contact.legs)
        out.legs.push_back({leg.s * lambda, leg.a / lambda});
    return out;
}

ContactData coarsen_contact(const ContactData& contact, Int lambda) {
    if (lambda <= 0) throw DomainError("coarsening parameter lambda must be positive");
    ContactData out;
    out.d = contact.d;
    out.g = contact.g;
    out.legs.reserve(contact.legs.size());
    for (const auto& leg : contact.legs) {
        if (leg.s % lambda != 0)
            throw DomainError("lambda does not divide the source rooting parameter s");
        out.legs.push_back({leg.s / lambda, leg.a * lambda});
    }
    return out;
}

}  // namespace modr
