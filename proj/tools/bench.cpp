// Benchmark comparing the serial reference scans against the OpenMP variants.
#include <chrono>
#include <cstdio>
#include <string>

#include "modr/contact.hpp"
#include "modr/graph.hpp"
#include "modr/scan.hpp"
#include "modr/shadow.hpp"
#include "modr/weighting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace modr;

namespace {

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

// cycle graph on nv vertices plus extra parallel edges, all degrees zero
std::pair<DecoratedGraph, ContactData> cycle_fixture(Int nv, Int extra) {
    DecoratedGraph g;
    for (Int i = 0; i < nv; ++i)
        g.vertices.push_back({"v" + std::to_string(i), 0, 0, Cone::External});
    Int eid = 0;
    for (Int i = 0; i < nv; ++i)
        g.edges.push_back({"e" + std::to_string(eid++), "v" + std::to_string(i),
                           "v" + std::to_string((i + 1) % nv)});
    for (Int k = 0; k < extra; ++k)
        g.edges.push_back({"e" + std::to_string(eid++), "v0", "v1"});
    ContactData contact;
    contact.d = 0;
    contact.g = 1 + extra;
    return {g, contact};
}

}  // namespace

int main(int argc, char** argv) {
    Int r = argc > 1 ? std::stoll(argv[1]) : 14;
    Int nv = argc > 2 ? std::stoll(argv[2]) : 4;
    Int extra = argc > 3 ? std::stoll(argv[3]) : 2;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    auto [g, contact] = cycle_fixture(nv, extra);
    auto sys = balancing_system(g, contact, r);
    std::printf("balanced-assignment scan over %s candidates (%lld^%zu)\n",
                big_to_string(sys.space_size()).c_str(), r, g.edges.size());

    BigInt n_serial, n_parallel;
    double t_serial = timed([&] { n_serial = count_solutions_serial(sys); });
    double t_parallel = timed([&] { n_parallel = count_solutions_parallel(sys); });
    std::printf("  serial   %8.3fs  count %s\n", t_serial, big_to_string(n_serial).c_str());
    std::printf("  parallel %8.3fs  count %s\n", t_parallel, big_to_string(n_parallel).c_str());
    std::printf("  speedup  %8.2fx  agree %s\n", t_serial / t_parallel,
                n_serial == n_parallel ? "yes" : "NO");
    if (n_serial != n_parallel) return 1;

    // shadow-group scan on a wide system: one cycle, many edges
    ModRType T;
    T.graph = g;
    T.contact = contact;
    T.r = r;
    for (const auto& e : g.edges) T.slope[e.id] = 1;  // slope 1 keeps t_e = r
    if (!balanced(T)) {
        // slopes 1 around a cycle balance only when degrees cancel; force via solver
        auto inv = compute_invariants(T.graph);
        std::map<std::string, Int> free;
        for (const auto& e : g.edges)
            if (!inv.spanning_tree.count(e.id)) free[e.id] = 1;
        T = solve_weighting(g, contact, r, free).type;
    }
    auto shsys = sh_congruences(build_sh_system(T));
    std::printf("shadow-solution scan over %s candidates\n",
                big_to_string(shsys.space_size()).c_str());
    double s_serial = timed([&] { n_serial = count_solutions_serial(shsys); });
    double s_parallel = timed([&] { n_parallel = count_solutions_parallel(shsys); });
    std::printf("  serial   %8.3fs  count %s\n", s_serial, big_to_string(n_serial).c_str());
    std::printf("  parallel %8.3fs  count %s\n", s_parallel, big_to_string(n_parallel).c_str());
    std::printf("  speedup  %8.2fx  agree %s\n", s_serial / s_parallel,
                n_serial == n_parallel ? "yes" : "NO");
    if (n_serial != n_parallel) return 1;
    if (n_serial != sh_order(T)) {
        std::printf("shadow scan disagrees with the lattice count\n");
        return 1;
    }
    return 0;
}
