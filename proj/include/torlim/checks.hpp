#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torlim/derived.hpp"
#include "torlim/limit.hpp"
#include "torlim/rng.hpp"

namespace torlim::checks {

// Default seed used by the CLI; every README example reproduces verbatim.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct CorpusOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t cases = 20;
    std::size_t max_generators = 3;
    long entry_bound = 12;
    long order_bound = 16;  // node order bound for the limit-oracle diagrams
    std::size_t max_nodes = 4;
    std::size_t family_size = 3;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string counterexample;  // first failure, inputs and matrices serialized
};

// Corpus samplers. All draws are deterministic in the rng state.
FpModule random_module(SeededRng& rng, std::size_t max_generators, long entry_bound);
FpModule random_finite_module(SeededRng& rng, long order_bound);

// A uniformly rich well-defined map: sampled on canonical coordinates (where
// Hom is explicit) and pulled back through the coordinate changes, so
// construction never needs rejection.
ModuleMap random_map(SeededRng& rng, const FpModule& src, const FpModule& dst);

struct ScrambledIso {
    FpModule scrambled;  // same group, fresh presentation
    ModuleMap forward;   // m -> scrambled
    ModuleMap backward;  // scrambled -> m
};
ScrambledIso random_scramble(SeededRng& rng, const FpModule& m);

// Automorphism given by units on the canonical coordinates; exact inverse.
struct AutomorphismPair {
    ModuleMap forward, backward;
};
AutomorphismPair random_automorphism(SeededRng& rng, const FpModule& m);

IsoDiagram random_iso_diagram(SeededRng& rng, std::size_t max_nodes, long order_bound);

// A resolution outside the canonical family: seeded twist, optionally padded
// to length 3 first.
FreeResolution random_external_resolution(SeededRng& rng, const FpModule& m, bool allow_padding);

SuiteResult suite_cocycle(const CorpusOptions& opts, bool inject_fault);
SuiteResult suite_homotopy_independence(const CorpusOptions& opts);
SuiteResult suite_functoriality(const CorpusOptions& opts);
SuiteResult suite_limit_oracle(const CorpusOptions& opts);
SuiteResult suite_l0_comparison(const CorpusOptions& opts);

std::vector<SuiteResult> run_verification_suites(const CorpusOptions& opts, bool inject_fault);

}  // namespace torlim::checks
