#pragma once

#include <map>
#include <string>
#include <vector>

#include "modr/numeric.hpp"
#include "modr/shadow.hpp"
#include "modr/weighting.hpp"

namespace modr {

// A tropical type with constant integer slopes, reducing compatibly to a mod-r
// type at every rooting parameter. Slopes are relative to the stored orientation
// and must balance exactly over the integers.
struct ZhatType {
    DecoratedGraph graph;
    ContactData contact;  // data at the base rooting parameter
    std::map<std::string, Int> islope;
};

// Exact integer balancing; base_r fixes the coarse contact orders c_i = base_r * a_i.
bool z_balanced(const ZhatType& Z, Int base_r);

// Reduction of a constant-slope family to level lambda * base_r.
ModRType zhat_reduce(const ZhatType& Z, Int base_r, Int lambda);

enum class AgeClass { SmallAge, LargeAge, Zero };

// Positive slope (along the stored orientation) is small age, negative is large.
std::map<std::string, AgeClass> age_classify(const ZhatType& Z);

struct LiftResult {
    bool found = false;
    ModRType lifted;        // at level lambda * T.r
    bool size_ok = false;   // r > max over external vertices of d_v - w(out) + sum c
    Int size_bound = 0;     // the computed maximum (0 when vacuous)
    bool size_vacuous = true;
};

// The only candidate level-(lambda r) weighting over T: canonical residues in
// {0,...,r-1}, taken from the external side on bipartite edges. Returned only when
// every balancing congruence holds mod lambda*r.
LiftResult canonical_lift(const ModRType& T, Int lambda);

// Integer slopes of the canonical lift, relative to the stored orientation.
std::map<std::string, Int> canonical_islopes(const ModRType& T);

struct FamilyLiftResult {
    bool found = false;
    ZhatType zhat;
    bool size_ok = false;
};

// Packages the canonical lift as a constant-slope family when it succeeds at every
// requested lambda (equivalently, when the integer slopes balance exactly).
FamilyLiftResult canonical_lift_family(const ModRType& T, const std::vector<Int>& lambdas);

// Exponent of the lambda-torsion of the semiabelian part:
// |E^b| - b0(Gamma^dag) + 1 + b1(Gamma_+) + 2 sum_{v internal} g_v
Int jac_torsion_exponent(const DecoratedGraph& g, const GraphInvariants& inv);
Int jac_torsion_exponent(const ModRType& T);

struct KTauResult {
    Int k = 0;
    Int bound = 0;  // max(2g-1, 0)
    bool at_upper_bound = false;
    bool single_internal_star = false;  // one internal vertex, b1 = 0, external genera 0
};

// k = b1 + 2 sum_{v internal} g_v - |V_+| for an essential type; asserts the
// 0 <= k <= max(2g-1,0) bounds. DomainError on non-essential input.
KTauResult k_tau_graph(const DecoratedGraph& g, const GraphInvariants& inv, Int genus);
KTauResult k_tau(const ModRType& T);
KTauResult k_tau(const ZhatType& Z);

struct RegimeReport {
    bool large = false;             // r > max(d_v - w(out) + sum c) over external ends
    bool divisible = false;         // lift(m_e) | r for every edge
    bool nodal_nontrivial = false;  // m_e != 0 for every edge
    Int large_bound = 0;
    bool ok() const { return large && divisible && nodal_nontrivial; }
};

RegimeReport regime_check(const ModRType& T);

struct DegreeMonomial {
    Rat coefficient;         // |Sh(reduced)| / |Sh(big)|
    Int exponent = 0;        // torsion - eps + (b0(Gamma_0) - 1 when V_0 nonempty)
    Int exponent_raw = 0;    // torsion - eps, without the section-scaling factor
    bool regime_certified = false;

    Rat total(Int lambda) const { return coefficient * rat_pow(Rat(lambda), exponent); }
    Rat total_raw(Int lambda) const { return coefficient * rat_pow(Rat(lambda), exponent_raw); }
};

// Degree data of the comparison from level T.r = lambda*r down to level r.
DegreeMonomial comparison_degree(const ModRType& big, Int lambda);

struct SweepSample {
    Int lambda = 1;
    Rat total;
    Rat total_raw;
};

struct SweepReport {
    bool monomial = false;  // all samples equal C * lambda^k
    Rat constant;           // C
    Int k = 0;              // k_tau of the family
    bool regime_ok = false;
    std::vector<SweepSample> samples;
};

// Evaluates the comparison degree at each lambda and checks the samples against a
// single monomial C * lambda^{k_tau}. DomainError when a reduction fails balancing.
SweepReport monomiality_sweep(const ZhatType& Z, Int base_r, const std::vector<Int>& lambdas);

// dim = 3g - 3 + n + b0(Gamma_0) - |E| + |E^b| - b0(Gamma^dag) + b1(Gamma_+)
//       + sum_{v internal} g_v
Int dim_stratum_graph(const DecoratedGraph& g, const GraphInvariants& inv, Int genus, Int n);
Int dim_stratum(const ModRType& T);

struct Trichotomy {
    Int g = 0;
    Int n = 0;
    std::vector<Int> dims;
    bool equidimensional = false;
    Int expected_dim = 0;  // 3g-3+n for g = 0, n for g = 1
    Int max_dim = 0;
    Int excess = 0;  // max_dim - (3g-3+n)
};

Trichotomy equidimensionality_report(Int g, Int n, const std::vector<ModRType>& types);

}  // namespace modr
