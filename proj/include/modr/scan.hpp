#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "modr/contact.hpp"
#include "modr/graph.hpp"
#include "modr/numeric.hpp"

namespace modr {

// A system of linear congruences over mixed-radix tuples: variable x_i ranges over
// {0,...,radices[i]-1} and each row requires constant + sum coef*x ≡ 0 (mod modulus).
// This is the shared shape of the brute-force oracles: balanced slope assignments
// over (Z/rZ)^{|E|} and shadow-group solutions over prod Z/t_eZ.
struct CongruenceSystem {
    Int modulus = 1;
    std::vector<Int> radices;
    struct Row {
        Int constant = 0;
        std::vector<std::pair<std::size_t, Int>> terms;
    };
    std::vector<Row> rows;

    bool satisfied(const std::vector<Int>& x) const;
    BigInt space_size() const;
};

// Balancing congruences of (g, contact, r) over one slope variable per edge
// (edge-id order). Self-loops carry a variable that no row mentions.
CongruenceSystem balancing_system(const DecoratedGraph& g, const ContactData& contact, Int r);

// All tuples satisfying every row, in lexicographic order (leftmost digit slowest).
// Serial reference and OpenMP variant produce identical output.
// Throws BudgetError when the search space exceeds cap.
std::vector<std::vector<Int>> scan_solutions_serial(const CongruenceSystem& sys, const BigInt& cap);
std::vector<std::vector<Int>> scan_solutions_parallel(const CongruenceSystem& sys, const BigInt& cap);

// Count-only variants (same traversal, no materialization).
BigInt count_solutions_serial(const CongruenceSystem& sys);
BigInt count_solutions_parallel(const CongruenceSystem& sys);

}  // namespace modr
