#pragma once

#include <map>
#include <string>
#include <vector>

#include "modr/numeric.hpp"
#include "modr/scan.hpp"
#include "modr/weighting.hpp"

namespace modr {

// Signed cycle congruences cutting the shadow group out of prod_e Z/t_eZ:
// per basis cycle, sum sign * gcd(r, m_e) * a_e ≡ 0 (mod r), sign +1 along the
// stored orientation.
struct ShTerm {
    std::string edge;
    int sign = 1;
    Int coeff = 0;  // gcd(r, m_e) = r/t_e
};

struct ShSystem {
    Int r = 1;
    std::map<std::string, Int> moduli;  // edge -> t_e
    std::vector<std::vector<ShTerm>> equations;
};

ShSystem build_sh_system(const ModRType& T);

// Congruence-system view of an ShSystem (variables in sorted edge-id order).
CongruenceSystem sh_congruences(const ShSystem& sys);

// Elementary divisors (Smith normal form diagonal, nonzero entries) of an integer
// matrix.
std::vector<BigInt> elementary_divisors(std::vector<std::vector<BigInt>> m);

// Exact order of the shadow group: prod t_e divided by the order of the image of
// the defining homomorphism into (Z/rZ)^{b1}, computed through an integer lattice
// index. Trees return prod t_e.
BigInt sh_order(const ShSystem& sys);
BigInt sh_order(const ModRType& T);

// Exhaustive oracle: all solution tuples (sorted edge-id coordinates), lexicographic.
// Throws BudgetError when prod t_e exceeds cap.
std::vector<std::vector<Int>> sh_enumerate(const ModRType& T, const BigInt& cap);

struct KernelResult {
    BigInt order = 0;
    bool regime = false;         // every canonical slope lift divides r and is nonzero
    bool claim_checked = false;  // comparison against lambda^{|E(tree)|} performed
    bool claim_holds = false;
    BigInt claim_value = 0;  // lambda^{|E(tree)|}
};

// Order of the kernel of the level-(lambda r) to level-r reduction on shadow
// groups: elements whose componentwise residue mod t_e(r) vanishes. The claim
// comparison is only attached under the divisibility/nontriviality regime.
KernelResult reduction_kernel_order(const ModRType& big, Int lambda);

}  // namespace modr
