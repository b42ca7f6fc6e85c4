#include "modr/scan.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "modr/errors.hpp"

namespace modr {

bool CongruenceSystem::satisfied(const std::vector<Int>& x) const {
    for (const auto& row : rows) {
        Int acc = row.constant;
        for (auto [pos, c] : row.terms) acc += c * x[pos];
        if (rep_mod(acc, modulus) != 0) return false;
    }
    return true;
}

BigInt CongruenceSystem::space_size() const {
    BigInt n = 1;
    for (Int rad : radices) n *= rad;
    return n;
}

CongruenceSystem balancing_system(const DecoratedGraph& g, const ContactData& contact, Int r) {
    CongruenceSystem sys;
    sys.modulus = r;

    std::vector<std::string> ids;
    for (const auto& e : g.edges) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
    sys.radices.assign(ids.size(), r);

    auto cs = coarse_contacts(contact, r);
    std::unordered_map<std::string, Int> legsum;
    for (const auto& l : g.legs)
        legsum[l.vertex] += cs.at(static_cast<std::size_t>(l.leg_index));

    for (const auto& v : g.vertices) {
        CongruenceSystem::Row row;
        Int c0 = v.degree;
        if (legsum.count(v.id)) c0 -= legsum.at(v.id);
        row.constant = rep_mod(c0, r);
        for (const auto& e : g.edges) {
            if (e.source == e.target) continue;
            if (e.source == v.id) row.terms.push_back({pos.at(e.id), -1});
            if (e.target == v.id) row.terms.push_back({pos.at(e.id), +1});
        }
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

struct Walker {
    const CongruenceSystem& sys;
    std::vector<std::vector<std::pair<std::size_t, Int>>> coef;  // per variable
    std::vector<Int> x;
    std::vector<Int> acc;  // per-row residual, kept reduced
    Int zero_rows = 0;     // rows currently at residual 0

    explicit Walker(const CongruenceSystem& s) : sys(s), coef(s.radices.size()) {
        for (std::size_t rI = 0; rI < s.rows.size(); ++rI)
            for (auto [p, c] : s.rows[rI].terms) coef[p].push_back({rI, rep_mod(c, s.modulus)});
        reset(std::vector<Int>(s.radices.size(), 0));
    }

    void reset(std::vector<Int> start) {
        x = std::move(start);
        acc.assign(sys.rows.size(), 0);
        zero_rows = 0;
        for (std::size_t rI = 0; rI < sys.rows.size(); ++rI) {
            Int a = sys.rows[rI].constant;
            for (auto [p, c] : sys.rows[rI].terms) a += c * x[p];
            acc[rI] = rep_mod(a, sys.modulus);
            if (acc[rI] == 0) ++zero_rows;
        }
    }

    bool all_zero() const { return zero_rows == static_cast<Int>(sys.rows.size()); }

    void bump(std::size_t var, Int delta_times) {
        for (auto [rI, c] : coef[var]) {
            if (acc[rI] == 0) --zero_rows;
            acc[rI] = rep_mod(acc[rI] + c * delta_times, sys.modulus);
            if (acc[rI] == 0) ++zero_rows;
        }
    }

    // advance the odometer (rightmost digit fastest); false when exhausted
    bool step() {
        std::size_t i = x.size();
        while (i > 0) {
            std::size_t j = i - 1;
            if (x[j] + 1 < sys.radices[j]) {
                ++x[j];
                bump(j, 1);
                return true;
            }
            bump(j, -(sys.radices[j] - 1));
            x[j] = 0;
            --i;
        }
        return false;
    }
};

std::vector<Int> decode_index(const CongruenceSystem& sys, unsigned long long idx) {
    std::vector<Int> x(sys.radices.size(), 0);
    for (std::size_t i = sys.radices.size(); i > 0; --i) {
        std::size_t j = i - 1;
        x[j] = static_cast<Int>(idx % static_cast<unsigned long long>(sys.radices[j]));
        idx /= static_cast<unsigned long long>(sys.radices[j]);
    }
    return x;
}

unsigned long long checked_space(const CongruenceSystem& sys, const BigInt* cap) {
    BigInt n = sys.space_size();
    if (cap && n > *cap) throw BudgetError("scan space exceeds cap", big_to_string(n));
    if (n > BigInt(1) << 62) throw BudgetError("scan space too large", big_to_string(n));
    return n.convert_to<unsigned long long>();
}

}  // namespace

std::vector<std::vector<Int>> scan_solutions_serial(const CongruenceSystem& sys, const BigInt& cap) {
    unsigned long long n = checked_space(sys, &cap);
    std::vector<std::vector<Int>> out;
    if (n == 0) return out;
    Walker w(sys);
    for (unsigned long long i = 0; i < n; ++i) {
        if (w.all_zero()) out.push_back(w.x);
        if (i + 1 < n) w.step();
    }
    return out;
}

std::vector<std::vector<Int>> scan_solutions_parallel(const CongruenceSystem& sys, const BigInt& cap) {
    unsigned long long n = checked_space(sys, &cap);
    if (n == 0) return {};
#ifndef _OPENMP
    return scan_solutions_serial(sys, cap);
#else
    int nblocks = std::max(1, omp_get_max_threads() * 8);
    if (static_cast<unsigned long long>(nblocks) > n) nblocks = static_cast<int>(n);
    std::vector<std::vector<std::vector<Int>>> buckets(nblocks);
    unsigned long long chunk = (n + nblocks - 1) / nblocks;
#pragma omp parallel for schedule(static)
    for (int b = 0; b < nblocks; ++b) {
        unsigned long long lo = chunk * b;
        unsigned long long hi = std::min(n, lo + chunk);
        if (lo >= hi) continue;
        Walker w(sys);
        w.reset(decode_index(sys, lo));
        for (unsigned long long i = lo; i < hi; ++i) {
            if (w.all_zero()) buckets[b].push_back(w.x);
            if (i + 1 < hi) w.step();
        }
    }
    std::vector<std::vector<Int>> out;
    for (auto& b : buckets)
        for (auto& sol : b) out.push_back(std::move(sol));
    return out;
#endif
}

BigInt count_solutions_serial(const CongruenceSystem& sys) {
    unsigned long long n = checked_space(sys, nullptr);
    if (n == 0) return 0;
    unsigned long long cnt = 0;
    Walker w(sys);
    for (unsigned long long i = 0; i < n; ++i) {
        if (w.all_zero()) ++cnt;
        if (i + 1 < n) w.step();
    }
    return BigInt(cnt);
}

BigInt count_solutions_parallel(const CongruenceSystem& sys) {
    unsigned long long n = checked_space(sys, nullptr);
    if (n == 0) return 0;
#ifndef _OPENMP
    return count_solutions_serial(sys);
#else
    int nblocks = std::max(1, omp_get_max_threads() * 8);
    if (static_cast<unsigned long long>(nblocks) > n) nblocks = static_cast<int>(n);
    unsigned long long chunk = (n + nblocks - 1) / nblocks;
    unsigned long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int b = 0; b < nblocks; ++b) {
        unsigned long long lo = chunk * b;
        unsigned long long hi = std::min(n, lo + chunk);
        if (lo >= hi) continue;
        Walker w(sys);
        w.reset(decode_index(sys, lo));
        unsigned long long cnt = 0;
        for (unsigned long long i = lo; i < hi; ++i) {
            if (w.all_zero()) ++cnt;
            if (i + 1 < hi) w.step();
        }
        total += cnt;
    }
    return BigInt(total);
#endif
}

}  // namespace modr
