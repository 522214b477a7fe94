// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1 and 10 drive the installed CLI binary (path via --cli);
// everything else exercises the library directly against independent oracles.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "torlim/checks.hpp"
#include "torlim/cli.hpp"
#include "torlim/derived.hpp"
#include "torlim/errors.hpp"
#include "torlim/presentation_io.hpp"
#include "torlim/rng.hpp"
#include "torlim/smith.hpp"

using namespace torlim;

namespace {

constexpr std::uint64_t kSeed = checks::kDefaultSeed;

int g_failures = 0;

struct CommandResult {
    int exit_code;
    std::string output;
};

std::string g_cli_path = "./torlim";

CommandResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "torlim-acceptance";
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget of ") +
                  std::to_string(budget_seconds) + "s";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                elapsed);
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    }
}

std::string module_file_text(long n) {
    std::ostringstream out;
    out << "module M\ngenerators 1\nrelations\n[" << n << "]\n";
    return out.str();
}

// --- criterion bodies -------------------------------------------------------

bool gcd_law(std::string& detail) {
    const std::vector<long> values{2, 3, 4, 5, 6, 8, 9, 12};
    for (long a : values) {
        for (long b : values) {
            auto a_path = write_temp("a" + std::to_string(a) + ".mod", module_file_text(a));
            auto b_path = write_temp("b" + std::to_string(b) + ".mod", module_file_text(b));
            CommandResult r = run_cli("tor " + a_path.string() + " " + b_path.string() +
                                      " --degree 1 --json");
            if (r.exit_code != 0) {
                detail = "tor exited with " + std::to_string(r.exit_code);
                return false;
            }
            nlohmann::json body = nlohmann::json::parse(r.output);
            auto torsion = body["outputs"]["tor"]["torsion"];
            // independent oracle: kernel of multiplication by a on Z/b
            long kernel_size = 0;
            for (long x = 0; x < b; ++x)
                if ((a * x) % b == 0) ++kernel_size;
            long g = std::gcd(a, b);
            if (kernel_size != g) {
                detail = "oracle disagrees with gcd for a=" + std::to_string(a);
                return false;
            }
            bool expected_trivial = (g == 1);
            if (expected_trivial && !torsion.empty()) {
                detail = "expected trivial Tor for (" + std::to_string(a) + "," + std::to_string(b) + ")";
                return false;
            }
            if (!expected_trivial &&
                (torsion.size() != 1 || torsion[0].get<std::string>() != std::to_string(g))) {
                detail = "expected torsion (" + std::to_string(g) + ") for (" + std::to_string(a) +
                         "," + std::to_string(b) + "), got " + torsion.dump();
                return false;
            }
        }
    }
    return true;
}

bool l0_comparison(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 2));
    for (int t = 0; t < 50; ++t) {
        FpModule m = checks::random_module(rng, 3, 12);
        FpModule b = checks::random_module(rng, 3, 12);
        TensorFunctor func(b);
        DerivedValue dv = derived_object(func, m, 0, 3, kSeed);
        if (!is_isomorphism(epsilon_comparison(func, dv))) {
            detail = "case " + std::to_string(t) + ": comparison not an isomorphism";
            return false;
        }
    }
    return true;
}

bool high_degree_vanishing(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 2));  // same corpus stream as criterion 2
    for (int t = 0; t < 50; ++t) {
        FpModule m = checks::random_module(rng, 3, 12);
        FpModule b = checks::random_module(rng, 3, 12);
        TensorFunctor func(b);
        for (std::size_t n = 2; n <= 3; ++n) {
            DerivedValue dv = derived_object(func, m, n, 3, kSeed);
            if (!dv.limit.group.canonical_form().is_trivial()) {
                detail = "case " + std::to_string(t) + ": L_" + std::to_string(n) + " nontrivial";
                return false;
            }
            if (t % 10 == 0) {
                // force the computation through a padded length-3 resolution
                FreeResolution padded = pad_resolution_to(canonical_resolution(m), 3);
                ModuleMap u = compare_external(func, m, n, 3, kSeed, padded);
                if (!is_isomorphism(u) || !u.source().canonical_form().is_trivial()) {
                    detail = "padded resolution at case " + std::to_string(t) + " is nontrivial";
                    return false;
                }
            }
        }
    }
    return true;
}

bool cocycle_suite(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 4));
    for (int t = 0; t < 10; ++t) {
        FpModule m = checks::random_module(rng, 3, 12);
        FpModule b = checks::random_module(rng, 3, 12);
        TensorFunctor func(b);
        std::size_t degree = rng.below(2);
        for (std::size_t k = 1; k <= 5; ++k) {
            ResolutionFamily fam = resolution_family(m, k, family_seed(m, kSeed));
            IsoSystem sys = canonical_iso_system(func, fam, degree);
            verify_iso_system_laws(sys);  // throws on violation
        }
    }
    (void)detail;
    return true;
}

bool functoriality(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 5));
    for (int t = 0; t < 30; ++t) {
        FpModule m = checks::random_module(rng, 2, 10);
        FpModule n = checks::random_module(rng, 2, 10);
        FpModule o = checks::random_module(rng, 2, 10);
        FpModule b = checks::random_module(rng, 2, 10);
        TensorFunctor func(b);
        ModuleMap f = checks::random_map(rng, m, n);
        ModuleMap g = checks::random_map(rng, n, o);
        for (std::size_t degree = 0; degree <= 1; ++degree) {
            if (!compose_check(func, f, g, degree, 3, kSeed)) {
                detail = "composition law fails at case " + std::to_string(t) + " degree " +
                         std::to_string(degree);
                return false;
            }
            DerivedMap did = derived_map(func, identity_map(m), degree, 3, kSeed);
            if (!maps_equal(did.map, identity_map(did.source.limit.group))) {
                detail = "derived_map(id) != id at case " + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool resolution_independence(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 6));
    for (int t = 0; t < 20; ++t) {
        FpModule m = checks::random_module(rng, 2, 10);
        FpModule n = checks::random_module(rng, 2, 10);
        FpModule b = checks::random_module(rng, 2, 10);
        TensorFunctor func(b);
        ModuleMap f = checks::random_map(rng, m, n);
        FreeResolution qm = checks::random_external_resolution(rng, m, true);
        FreeResolution qn = checks::random_external_resolution(rng, n, true);
        std::size_t degree = rng.below(2);
        ModuleMap um = compare_external(func, m, degree, 3, kSeed, qm);
        ModuleMap un = compare_external(func, n, degree, 3, kSeed, qn);
        if (!is_isomorphism(um) || !is_isomorphism(un)) {
            detail = "comparison map not an isomorphism at case " + std::to_string(t);
            return false;
        }
        // θ-naturality square
        DerivedMap dm = derived_map(func, f, degree, 3, kSeed);
        ModuleMap theta = comparison_map(func, f, qm, qn, degree);
        if (!maps_equal(compose(dm.map, um), compose(un, theta))) {
            detail = "naturality square fails at case " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool limit_oracle(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 7));
    for (int t = 0; t < 20; ++t) {
        IsoDiagram d = checks::random_iso_diagram(rng, 4, 16);
        LimitObject lim = limit(d);
        if (sorted_tuples(limit_element_tuples(lim)) != sorted_tuples(brute_force_limit(d))) {
            detail = "tuple sets disagree at case " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool exact_linalg_suite(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 8));
    for (int t = 0; t < 200; ++t) {
        std::size_t rows = rng.below(9), cols = rng.below(9);
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng.range(-50, 50);
        SmithDecomposition s = smith_normal_form(a);
        if (multiply_serial(multiply_serial(s.u, a), s.v) != s.d) {
            detail = "U*A*V != D at case " + std::to_string(t);
            return false;
        }
        if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) {
            detail = "transform not unimodular at case " + std::to_string(t);
            return false;
        }
        const std::size_t k = std::min(rows, cols);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (s.diagonal[i] == 0 && s.diagonal[i + 1] != 0) {
                detail = "zeros do not trail at case " + std::to_string(t);
                return false;
            }
            if (s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] != 0) {
                detail = "divisibility chain fails at case " + std::to_string(t);
                return false;
            }
        }
        IntMatrix kb = kernel_basis(a);
        if (!multiply_serial(a, kb).is_zero()) {
            detail = "kernel basis does not annihilate at case " + std::to_string(t);
            return false;
        }
        // saturation: random kernel elements land in the basis span
        LinearSolver in_basis(kb);
        for (int probe = 0; probe < 3; ++probe) {
            std::vector<Int> coeffs(kb.cols());
            for (auto& c : coeffs) c = rng.range(-4, 4);
            std::vector<Int> x = mat_vec(kb, coeffs);
            if (!in_basis.solve(x)) {
                detail = "kernel basis not saturated at case " + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool homotopy_invariance(std::string& detail) {
    SeededRng rng(mix_seed(kSeed, 9));
    for (int t = 0; t < 20; ++t) {
        FpModule m = checks::random_module(rng, 2, 10);
        FpModule n = checks::random_module(rng, 2, 10);
        FpModule b = checks::random_module(rng, 2, 10);
        ModuleMap f = checks::random_map(rng, m, n);
        FreeResolution p = checks::random_external_resolution(rng, m, true);
        FreeResolution q = checks::random_external_resolution(rng, n, true);
        TensorFunctor func(b);
        ChainMap lift1 = lift_map(f, p, q);
        ChainMap lift2 = lift_map_perturbed(f, p, q, rng.next());
        if (!are_homotopic(lift1, lift2)) {
            detail = "independently produced lifts are not homotopic at case " + std::to_string(t);
            return false;
        }
        for (std::size_t degree = 0; degree <= 1; ++degree) {
            ModuleMap t1 = induced_map_on_homology(apply_functor(func, lift1), degree);
            ModuleMap t2 = induced_map_on_homology(apply_functor(func, lift2), degree);
            if (!maps_equal(t1, t2)) {
                detail = "theta outputs differ at case " + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool determinism_and_fault(std::string& detail) {
    auto a_path = write_temp("det_a.mod", module_file_text(4));
    auto b_path = write_temp("det_b.mod", module_file_text(6));
    std::string tor_args = "tor " + a_path.string() + " " + b_path.string() + " --degree 1 --json";
    CommandResult r1 = run_cli(tor_args);
    CommandResult r2 = run_cli(tor_args);
    if (r1.exit_code != 0 || r2.exit_code != 0) {
        detail = "tor exited nonzero";
        return false;
    }
    if (r1.output != r2.output) {
        detail = "tor reports differ between identical runs";
        return false;
    }
    std::string resolve_args = "resolve " + a_path.string() + " -k 3 --json";
    CommandResult s1 = run_cli(resolve_args);
    CommandResult s2 = run_cli(resolve_args);
    if (s1.exit_code != 0 || s1.output != s2.output) {
        detail = "resolve reports differ between identical runs";
        return false;
    }
    std::string verify_args = "verify --cases 3 --family-size 2 --json";
    CommandResult v1 = run_cli(verify_args);
    CommandResult v2 = run_cli(verify_args);
    if (v1.exit_code != 0) {
        detail = "verify exited " + std::to_string(v1.exit_code);
        return false;
    }
    if (v1.output != v2.output) {
        detail = "verify reports differ between identical runs";
        return false;
    }
    std::string map_args;
    {
        auto map_path = write_temp("det_f.map",
                                   "module A\ngenerators 1\nrelations\n[2]\n"
                                   "module B\ngenerators 1\nrelations\n[4]\n"
                                   "map f\nsource A\ntarget B\nmatrix\n[2]\n");
        map_args = "map " + map_path.string() + " " + b_path.string() + " --degree 1 --json";
    }
    CommandResult m1 = run_cli(map_args);
    CommandResult m2 = run_cli(map_args);
    if (m1.exit_code != 0 || m1.output != m2.output) {
        detail = "map reports differ between identical runs";
        return false;
    }
    CommandResult fault = run_cli("verify --cases 2 --inject-fault --json");
    if (fault.exit_code != 1) {
        detail = "inject-fault exited " + std::to_string(fault.exit_code) + ", expected 1";
        return false;
    }
    if (fault.output.find("injected fault caught") == std::string::npos) {
        detail = "inject-fault report does not show the caught violation";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    if (argc == 2 && std::string(argv[1]).rfind("--", 0) != 0) g_cli_path = argv[1];

    std::printf("acceptance suite (cli: %s)\n", g_cli_path.c_str());

    criterion(1, "gcd law for Tor_1 on cyclic groups via the CLI", 10.0, gcd_law);
    criterion(2, "L0(F) compares isomorphically to F on 50 random presentations", 60.0, l0_comparison);
    criterion(3, "L_n vanishes for n = 2, 3, padded length-3 runs included", 60.0, high_degree_vanishing);
    criterion(4, "iso-system laws hold for family sizes 1..5", 120.0, cocycle_suite);
    criterion(5, "functor laws for 30 random composable pairs, degrees 0 and 1", 120.0, functoriality);
    criterion(6, "20 twisted/padded resolutions compare isomorphically + naturality", 0.0,
              resolution_independence);
    criterion(7, "limit tuple sets equal the brute-force oracle", 30.0, limit_oracle);
    criterion(8, "Smith/kernel invariants on 200 random matrices", 30.0, exact_linalg_suite);
    criterion(9, "independently produced lifts are homotopic with equal theta", 0.0,
              homotopy_invariance);
    criterion(10, "bit-identical reports on re-run; inject-fault caught with exit 1", 0.0,
              determinism_and_fault);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
