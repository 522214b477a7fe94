#include "torlim/checks.hpp"

#include <sstream>

#include "torlim/errors.hpp"
#include "torlim/presentation_io.hpp"

namespace torlim::checks {

namespace {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::string describe_module(const std::string& name, const FpModule& m) {
    std::ostringstream out;
    out << print_presentation(m, name) << "# canonical form: " << m.canonical_form().to_string() << "\n";
    return out.str();
}

std::string describe_map(const std::string& name, const ModuleMap& f) {
    std::ostringstream out;
    out << "# map " << name << ": " << f.source().canonical_form().to_string() << " -> "
        << f.target().canonical_form().to_string() << ", matrix " << f.matrix().to_string() << "\n";
    return out.str();
}

}  // namespace

FpModule random_module(SeededRng& rng, std::size_t max_generators, long entry_bound) {
    // Mostly 1..max generators; occasionally the zero module.
    std::size_t g = rng.chance(1, 12) ? 0 : 1 + rng.below(max_generators);
    std::size_t r = rng.below(g + 2);
    IntMatrix rel(r, g);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < g; ++j) rel.at(i, j) = rng.range(-entry_bound, entry_bound);
    return FpModule(g, std::move(rel));
}

FpModule random_finite_module(SeededRng& rng, long order_bound) {
    if (rng.chance(1, 10)) return FpModule(1, IntMatrix::from_rows({{1}}));  // trivial, nontrivially presented
    std::vector<long> chain;
    long first = rng.range(2, order_bound);
    chain.push_back(first);
    long product = first;
    while (chain.size() < 3 && rng.chance(1, 2)) {
        std::vector<long> candidates;
        for (long d = chain.back(); product * d <= order_bound; d += chain.back()) candidates.push_back(d);
        if (candidates.empty()) break;
        long next = candidates[rng.below(candidates.size())];
        chain.push_back(next);
        product *= next;
    }
    IntMatrix rel(chain.size(), chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) rel.at(i, i) = chain[i];
    FpModule diag(chain.size(), std::move(rel));
    return random_scramble(rng, diag).scrambled;
}

ModuleMap random_map(SeededRng& rng, const FpModule& src, const FpModule& dst) {
    const auto& a = src.coordinate_orders();
    const auto& b = dst.coordinate_orders();
    IntMatrix c(dst.generators(), src.generators());
    for (std::size_t i = 0; i < dst.generators(); ++i)
        for (std::size_t j = 0; j < src.generators(); ++j) {
            Int step;
            if (a[j] == 0)
                step = 1;
            else if (b[i] == 0)
                step = 0;  // Hom(Z/a, Z) = 0
            else
                step = b[i] / gcd(a[j], b[i]);
            if (step == 0) continue;
            c.at(i, j) = step * Int(rng.range(-2, 2));
        }
    IntMatrix m = dst.coordinate_change_inv() * c * src.coordinate_change();
    return ModuleMap(src, dst, std::move(m));
}

ScrambledIso random_scramble(SeededRng& rng, const FpModule& m) {
    const std::size_t g = m.generators();
    auto [t, t_inv] = random_unimodular(rng, g, 2 * g + 2);
    IntMatrix rel = m.relations() * t.transpose();
    // Optional redundant rows: integer combinations of existing relations.
    std::size_t extra = rng.below(2);
    for (std::size_t e = 0; e < extra && rel.rows() > 0; ++e) {
        IntMatrix grown(rel.rows() + 1, rel.cols());
        for (std::size_t i = 0; i < rel.rows(); ++i)
            for (std::size_t j = 0; j < rel.cols(); ++j) grown.at(i, j) = rel.at(i, j);
        for (std::size_t i = 0; i < rel.rows(); ++i) {
            Int coeff(rng.range(-2, 2));
            if (coeff == 0) continue;
            for (std::size_t j = 0; j < rel.cols(); ++j)
                grown.at(rel.rows(), j) += coeff * rel.at(i, j);
        }
        rel = std::move(grown);
    }
    FpModule scrambled(g, std::move(rel));
    ModuleMap forward(m, scrambled, t);
    ModuleMap backward(scrambled, m, t_inv);
    return ScrambledIso{std::move(scrambled), std::move(forward), std::move(backward)};
}

AutomorphismPair random_automorphism(SeededRng& rng, const FpModule& m) {
    const std::size_t g = m.generators();
    const auto& orders = m.coordinate_orders();
    IntMatrix c(g, g), c_inv(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        if (orders[i] == 0 || orders[i] == 1) {
            bool flip = orders[i] == 0 && rng.chance(1, 2);
            c.at(i, i) = flip ? -1 : 1;
            c_inv.at(i, i) = flip ? -1 : 1;
            continue;
        }
        Int unit = 1 + Int(rng.below(orders[i].get_ui() - 1 ? orders[i].get_ui() - 1 : 1));
        while (gcd(unit, orders[i]) != 1) unit = unit % orders[i] + 1;
        Int unit_inv;
        mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), orders[i].get_mpz_t());
        c.at(i, i) = unit;
        c_inv.at(i, i) = unit_inv;
    }
    IntMatrix fwd = m.coordinate_change_inv() * c * m.coordinate_change();
    IntMatrix bwd = m.coordinate_change_inv() * c_inv * m.coordinate_change();
    return AutomorphismPair{ModuleMap(m, m, std::move(fwd)), ModuleMap(m, m, std::move(bwd))};
}

IsoDiagram random_iso_diagram(SeededRng& rng, std::size_t max_nodes, long order_bound) {
    const std::size_t count = 1 + rng.below(max_nodes);
    FpModule base = random_finite_module(rng, order_bound);
    std::vector<FpModule> nodes;
    std::vector<ModuleMap> to_node, from_node;  // alpha_i and alpha_i^{-1}
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) {
            nodes.push_back(base);
            to_node.push_back(identity_map(base));
            from_node.push_back(identity_map(base));
            continue;
        }
        AutomorphismPair aut = random_automorphism(rng, base);
        ScrambledIso scr = random_scramble(rng, base);
        nodes.push_back(scr.scrambled);
        to_node.push_back(compose(scr.forward, aut.forward));
        from_node.push_back(compose(aut.backward, scr.backward));
    }
    std::vector<ModuleMap> arrows;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j)
                arrows.push_back(identity_map(nodes[i]));
            else
                arrows.push_back(compose(to_node[j], from_node[i]));
        }
    return IsoDiagram(std::move(nodes), std::move(arrows));
}

FreeResolution random_external_resolution(SeededRng& rng, const FpModule& m, bool allow_padding) {
    FreeResolution p = canonical_resolution(m);
    if (allow_padding && rng.chance(1, 2)) p = pad_resolution_to(p, 3);
    return twist_resolution(p, rng.next());
}

SuiteResult suite_cocycle(const CorpusOptions& opts, bool inject_fault) {
    SuiteResult result{"cocycle", true, 0, ""};
    if (inject_fault) {
        // Designated fault case: Z/4, -⊗Z/6, degree 1, family of 3. The
        // homologies are Z/2, so bumping one entry of iso(0,1) stays
        // well-defined but must break the cocycle and inverse laws.
        FpModule m(1, IntMatrix::from_rows({{4}}));
        FpModule b(1, IntMatrix::from_rows({{6}}));
        TensorFunctor func(b);
        ResolutionFamily family = resolution_family(m, 3, family_seed(m, opts.seed));
        IsoSystem sys = canonical_iso_system(func, family, 1);
        IntMatrix tampered = sys.iso(0, 1).matrix();
        tampered.at(0, 0) += 1;
        sys.isos[0 * sys.size() + 1] = ModuleMap::unchecked(sys.homologies[0].group,
                                                            sys.homologies[1].group, tampered);
        result.cases = 1;
        try {
            verify_iso_system_laws(sys);
            result.passed = false;
            result.counterexample = "injected fault was NOT caught by the cocycle checker";
        } catch (const CocycleViolation& e) {
            result.passed = false;
            result.counterexample = std::string("injected fault caught: ") + e.what() +
                                    "\ntampered iso(0,1) matrix: " + tampered.to_string();
        }
        return result;
    }
    SeededRng rng(mix_seed(opts.seed, 0x7c0c));
    for (std::size_t c = 0; c < opts.cases; ++c) {
        FpModule m = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule b = random_module(rng, opts.max_generators, opts.entry_bound);
        std::size_t degree = rng.below(3);
        std::size_t k = 1 + rng.below(5);
        ++result.cases;
        try {
            TensorFunctor func(b);
            ResolutionFamily family = resolution_family(m, k, family_seed(m, opts.seed));
            IsoSystem sys = canonical_iso_system(func, family, degree);
            verify_iso_system_laws(sys);
        } catch (const std::exception& e) {
            result.passed = false;
            result.counterexample = describe_module("M", m) + describe_module("B", b) +
                                    "# degree " + std::to_string(degree) + ", family size " +
                                    std::to_string(k) + "\n# " + e.what();
            break;
        }
    }
    return result;
}

SuiteResult suite_homotopy_independence(const CorpusOptions& opts) {
    SuiteResult result{"homotopy_independence", true, 0, ""};
    SeededRng rng(mix_seed(opts.seed, 0x407f));
    for (std::size_t c = 0; c < opts.cases; ++c) {
        FpModule m = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule n = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule b = random_module(rng, opts.max_generators, opts.entry_bound);
        ModuleMap f = random_map(rng, m, n);
        FreeResolution p = random_external_resolution(rng, m, true);
        FreeResolution q = random_external_resolution(rng, n, true);
        std::uint64_t perturb = rng.next();
        ++result.cases;
        try {
            ChainMap lift1 = lift_map(f, p, q);
            ChainMap lift2 = lift_map_perturbed(f, p, q, perturb);
            TensorFunctor func(b);
            bool ok = are_homotopic(lift1, lift2);
            for (std::size_t degree = 0; ok && degree <= 1; ++degree) {
                ModuleMap t1 = induced_map_on_homology(apply_functor(func, lift1), degree);
                ModuleMap t2 = induced_map_on_homology(apply_functor(func, lift2), degree);
                ok = maps_equal(t1, t2);
            }
            if (!ok) {
                result.passed = false;
                result.counterexample = describe_module("M", m) + describe_module("N", n) +
                                        describe_map("f", f) + "# lifts disagree";
                break;
            }
        } catch (const std::exception& e) {
            result.passed = false;
            result.counterexample = describe_module("M", m) + describe_module("N", n) +
                                    describe_map("f", f) + "# " + e.what();
            break;
        }
    }
    return result;
}

SuiteResult suite_functoriality(const CorpusOptions& opts) {
    SuiteResult result{"functoriality", true, 0, ""};
    SeededRng rng(mix_seed(opts.seed, 0xf14c));
    for (std::size_t c = 0; c < opts.cases; ++c) {
        FpModule m = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule n = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule o = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule b = random_module(rng, opts.max_generators, opts.entry_bound);
        ModuleMap f = random_map(rng, m, n);
        ModuleMap g = random_map(rng, n, o);
        std::size_t degree = rng.below(2);
        ++result.cases;
        try {
            TensorFunctor func(b);
            if (!compose_check(func, f, g, degree, opts.family_size, opts.seed)) {
                result.passed = false;
                result.counterexample = describe_module("M", m) + describe_module("N", n) +
                                        describe_module("O", o) + describe_map("f", f) +
                                        describe_map("g", g) + "# composition law fails at degree " +
                                        std::to_string(degree);
                break;
            }
            DerivedMap did = derived_map(func, identity_map(m), degree, opts.family_size, opts.seed);
            if (!maps_equal(did.map, identity_map(did.source.limit.group))) {
                result.passed = false;
                result.counterexample =
                    describe_module("M", m) + "# derived_map(id) is not the identity";
                break;
            }
        } catch (const std::exception& e) {
            result.passed = false;
            result.counterexample = describe_module("M", m) + describe_module("N", n) +
                                    describe_module("O", o) + "# " + e.what();
            break;
        }
    }
    return result;
}

SuiteResult suite_limit_oracle(const CorpusOptions& opts) {
    SuiteResult result{"limit_oracle", true, 0, ""};
    SeededRng rng(mix_seed(opts.seed, 0x1147));
    for (std::size_t c = 0; c < opts.cases; ++c) {
        ++result.cases;
        IsoDiagram diagram = random_iso_diagram(rng, opts.max_nodes, opts.order_bound);
        try {
            LimitObject lim = limit(diagram);
            auto computed = sorted_tuples(limit_element_tuples(lim));
            auto oracle = sorted_tuples(brute_force_limit(diagram));
            if (computed != oracle) {
                result.passed = false;
                std::ostringstream out;
                out << "# limit tuple set disagrees with brute-force oracle\n";
                for (std::size_t i = 0; i < diagram.size(); ++i)
                    out << describe_module("node" + std::to_string(i), diagram.node(i));
                out << "# computed " << computed.size() << " tuples, oracle " << oracle.size() << "\n";
                result.counterexample = out.str();
                break;
            }
        } catch (const std::exception& e) {
            result.passed = false;
            result.counterexample = std::string("# ") + e.what();
            break;
        }
    }
    return result;
}

SuiteResult suite_l0_comparison(const CorpusOptions& opts) {
    SuiteResult result{"l0_comparison", true, 0, ""};
    SeededRng rng(mix_seed(opts.seed, 0x1000));
    for (std::size_t c = 0; c < opts.cases; ++c) {
        FpModule m = random_module(rng, opts.max_generators, opts.entry_bound);
        FpModule b = random_module(rng, opts.max_generators, opts.entry_bound);
        ++result.cases;
        try {
            TensorFunctor func(b);
            DerivedValue dv = derived_object(func, m, 0, opts.family_size, opts.seed);
            ModuleMap eps = epsilon_comparison(func, dv);
            if (!is_isomorphism(eps)) {
                result.passed = false;
                result.counterexample = describe_module("M", m) + describe_module("B", b) +
                                        "# epsilon comparison is not an isomorphism; matrix " +
                                        eps.matrix().to_string();
                break;
            }
        } catch (const std::exception& e) {
            result.passed = false;
            result.counterexample =
                describe_module("M", m) + describe_module("B", b) + "# " + e.what();
            break;
        }
    }
    return result;
}

std::vector<SuiteResult> run_verification_suites(const CorpusOptions& opts, bool inject_fault) {
    std::vector<SuiteResult> results;
    results.push_back(suite_cocycle(opts, inject_fault));
    results.push_back(suite_homotopy_independence(opts));
    results.push_back(suite_functoriality(opts));
    results.push_back(suite_limit_oracle(opts));
    results.push_back(suite_l0_comparison(opts));
    return results;
}

}  // namespace torlim::checks
