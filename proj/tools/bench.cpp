// Benchmark comparing the serial reference kernels against the OpenMP ones:
// big-integer matrix products, the comparison-map grid of an iso system, and
// the brute-force limit enumeration. Workloads are seeded and fixed; timings
// go to stdout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "torlim/checks.hpp"
#include "torlim/derived.hpp"
#include "torlim/parallel.hpp"
#include "torlim/rng.hpp"

using namespace torlim;

namespace {

double time_of(const std::function<void()>& body, int repeats) {
    double best = 1e100;
    for (int r = 0; r < repeats; ++r) {
        auto start = std::chrono::steady_clock::now();
        body();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-28s %10.4fs %10.4fs %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

IntMatrix random_matrix(SeededRng& rng, std::size_t n, int bits) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = 1;
            for (int b = 0; b < bits; b += 60) v = (v << 60) + Int(rng.next() >> 4);
            m.at(i, j) = rng.chance(1, 2) ? v : Int(-v);
        }
    return m;
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", parallel::max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        SeededRng rng(2024);
        IntMatrix a = random_matrix(rng, 48, 900);
        IntMatrix b = random_matrix(rng, 48, 900);
        IntMatrix out_s, out_p;
        double ts = time_of([&] { out_s = multiply_serial(a, b); }, 3);
        double tp = time_of([&] { out_p = multiply_parallel(a, b); }, 3);
        if (out_s != out_p) {
            std::fprintf(stderr, "FATAL: parallel product disagrees with serial reference\n");
            return 1;
        }
        row("matmul 48x48 / 900-bit", ts, tp);
    }

    {
        FpModule m(3, IntMatrix::from_rows({{8, 2, 0}, {0, 12, 4}, {2, 2, 30}}));
        FpModule b(2, IntMatrix::from_rows({{6, 3}, {0, 18}}));
        TensorFunctor func(b);
        ResolutionFamily fam = resolution_family(m, 6, 99);
        double ts, tp;
        parallel::set_enabled(false);
        ts = time_of([&] { canonical_iso_system(func, fam, 1); }, 2);
        parallel::set_enabled(true);
        tp = time_of([&] { canonical_iso_system(func, fam, 1); }, 2);
        row("iso-system grid k=6", ts, tp);
    }

    {
        // four nodes of order 16: 65536 tuples to filter
        SeededRng rng(7);
        FpModule base(1, IntMatrix::from_rows({{16}}));
        std::vector<FpModule> nodes{base};
        std::vector<ModuleMap> to_node{identity_map(base)}, from_node{identity_map(base)};
        for (int i = 1; i < 4; ++i) {
            checks::ScrambledIso scr = checks::random_scramble(rng, base);
            nodes.push_back(scr.scrambled);
            to_node.push_back(scr.forward);
            from_node.push_back(scr.backward);
        }
        std::vector<ModuleMap> arrows;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                arrows.push_back(i == j ? identity_map(nodes[i]) : compose(to_node[j], from_node[i]));
        IsoDiagram diagram(std::move(nodes), std::move(arrows));
        double ts, tp;
        parallel::set_enabled(false);
        ts = time_of([&] { brute_force_limit(diagram); }, 2);
        parallel::set_enabled(true);
        tp = time_of([&] { brute_force_limit(diagram); }, 2);
        row("brute-force limit filter", ts, tp);
    }

    return 0;
}
