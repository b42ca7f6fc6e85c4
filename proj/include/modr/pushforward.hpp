#pragma once

#include <map>
#include <string>
#include <vector>

#include "modr/numeric.hpp"
#include "modr/weighting.hpp"

namespace modr {

// A divisor with fractional points: coefficient a against isotropy order s at each
// point, plus an integer part. Coarse pushforward keeps floor(a/s) per point.
struct FractionalDivisorTerm {
    Int coefficient = 0;
    Int isotropy = 1;
};

struct FractionalDivisor {
    std::vector<FractionalDivisorTerm> terms;
    Int integer_part = 0;
};

// sum floor(a_i / s_i) + integer part
Int pushforward_degree(const FractionalDivisor& D);

// sum a_i / s_i + integer part (exact degree before pushing forward)
Rat exact_degree(const FractionalDivisor& D);

// The fractional divisor of the restricted bundle at an external vertex: one term
// per outgoing slope (canonical residue against r), one per leg (gerby contact
// against s_i), with one edge term replaced by the balancing-determined integer.
// Throws DomainError when the vertex is internal.
FractionalDivisor external_vertex_divisor(const ModRType& T, const std::string& vertex_id);

// Coarse degree of the pushed-forward restricted bundle at an external vertex.
Int external_vertex_pushdeg(const ModRType& T, const std::string& vertex_id);

struct InducibilityReport {
    bool window_ok = false;
    std::map<std::string, Int> pushdeg;      // per external vertex
    std::map<std::string, bool> pushdeg_ok;  // pushdeg >= 0
    bool possibly_inducible = false;         // necessary conditions only
};

// Necessary conditions for a nonempty stratum: the subset degree window plus
// nonnegative coarse pushforward at every external vertex. Never asserts
// inducibility.
InducibilityReport inducibility_necessary(const ModRType& T, bool exhaustive_window = true);

}  // namespace modr
