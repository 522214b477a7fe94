#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torlim/chain_complex.hpp"

namespace torlim {

// Free resolution (P, ε) of a module M: a bounded complex of free modules
// together with a surjective augmentation P_0 -> M such that the augmented
// complex is exact. Over Z the canonical construction has length <= 1, but
// longer (padded or twisted) resolutions are first-class inputs everywhere.
struct FreeResolution {
    ChainComplex complex;
    ModuleMap augmentation;  // complex.object(0) -> M

    const FpModule& resolved() const { return augmentation.target(); }
    std::size_t length() const { return complex.length(); }
    std::size_t total_rank() const;
    // (length, total free rank), ordered lexicographically.
    std::pair<std::size_t, std::size_t> rank_measure() const { return {length(), total_rank()}; }
};

// A canonically generated finite family of resolutions of M, all of the same
// rank measure: the canonical resolution plus seeded unimodular rebasings of
// it. Membership order is deterministic in (module, k, seed).
struct ResolutionFamily {
    FpModule module;
    std::vector<FreeResolution> members;
    std::pair<std::size_t, std::size_t> rank_measure;
};

// Length <= 1 resolution read off the presentation, with redundant relation
// rows removed via Hermite normal form. Deterministic.
FreeResolution canonical_resolution(const FpModule& m);

// Rebases every degree of p by a seeded unimodular transform (a short product
// of elementary matrices with coefficients in [-3, 3]) and conjugates the
// differentials and augmentation accordingly.
FreeResolution twist_resolution(const FreeResolution& p, std::uint64_t seed);

// Extends a resolution to the given length by appending exact padding: pairs
//   .. -> Z --id--> Z --0--> P_top
// and, when one extra degree is needed, a single zero module.
FreeResolution pad_resolution_to(const FreeResolution& p, std::size_t target_length);

ResolutionFamily resolution_family(const FpModule& m, std::size_t k, std::uint64_t seed);

// Full verification: freeness of every object, surjectivity of the
// augmentation, ε ∘ d_1 = 0, and exactness at every degree.
bool is_resolution(const FreeResolution& p, const FpModule& m);

// Comparison theorem: extends f to a chain map between resolutions of its
// source and target, constructed degreewise by exact solving. Deterministic;
// any two lifts are chain homotopic.
ChainMap lift_map(const ModuleMap& f, const FreeResolution& p, const FreeResolution& q);

// Same construction, but each solved column is shifted by a seeded element of
// the admissible kernel — a different, equally valid representative. Used to
// exercise homotopy independence.
ChainMap lift_map_perturbed(const ModuleMap& f, const FreeResolution& p, const FreeResolution& q,
                            std::uint64_t seed);

// Random unimodular matrix together with its exact inverse, built as a product
// of `steps` elementary factors with coefficients bounded by 3.
std::pair<IntMatrix, IntMatrix> random_unimodular(class SeededRng& rng, std::size_t n, std::size_t steps);

}  // namespace torlim
