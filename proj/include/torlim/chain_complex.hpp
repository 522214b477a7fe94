#pragma once

#include <vector>

#include "torlim/fp_module.hpp"
#include "torlim/functor.hpp"

namespace torlim {

// Bounded chain complex C_0 .. C_len with differentials d_n : C_n -> C_{n-1}
// for 1 <= n <= len. Construction validates shapes and d∘d = 0 (NotAComplex).
// Out-of-range degrees behave as the zero module with zero differentials;
// boundary(n) realizes that convention for any n >= 0.
class ChainComplex {
public:
    ChainComplex(std::vector<FpModule> objects, std::vector<ModuleMap> differentials);

    std::size_t length() const { return objects_.size() - 1; }
    const FpModule& object(std::size_t n) const { return objects_.at(n); }
    const FpModule& object_or_zero(std::size_t n) const;
    const ModuleMap& differential(std::size_t n) const { return differentials_.at(n - 1); }
    ModuleMap boundary(std::size_t n) const;

    bool operator==(const ChainComplex& o) const;
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

private:
    std::vector<FpModule> objects_;
    std::vector<ModuleMap> differentials_;
    FpModule zero_;
};

// Chain map between complexes (possibly of different lengths); components
// beyond the given vector are zero maps. Construction validates the commuting
// squares d'_n ∘ f_n = f_{n-1} ∘ d_n at every degree.
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    std::size_t top_degree() const { return components_.size() - 1; }
    const ModuleMap& component(std::size_t n) const { return components_.at(n); }

private:
    ChainComplex source_, target_;
    std::vector<ModuleMap> components_;  // 0 .. max(length_s, length_t)
};

ChainMap identity_chain_map(const ChainComplex& c);
ChainMap zero_chain_map(const ChainComplex& source, const ChainComplex& target);
ChainMap compose(const ChainMap& g, const ChainMap& f);
bool chain_maps_equal(const ChainMap& f, const ChainMap& g);

// H_n = ker d_n / im d_{n+1}, presented on a canonical basis of the cycle
// lattice. The cycle lattice lives inside Z^{gens(C_n)} as the preimage of the
// relation lattice of C_{n-1} under d_n; `cycles_basis` is its Hermite basis,
// and the presentation's relations express the boundaries (plus the ambient
// relations of C_n) in that basis.
struct HomologyObject {
    FpModule group;
    IntMatrix cycles_basis;  // gens(C_n) x gens(group)
    FpModule ambient;        // C_n

    // The quotient assignment cycle |-> class (exact solve; the cycle must lie
    // in the cycle lattice).
    std::vector<Int> class_of(const std::vector<Int>& cycle) const;
    // The representative in C_n of a homology class.
    std::vector<Int> representative(const std::vector<Int>& cls) const { return mat_vec(cycles_basis, cls); }
};

HomologyObject homology(const ChainComplex& c, std::size_t n);

ChainComplex apply_functor(const Functor& f, const ChainComplex& c);
ChainMap apply_functor(const Functor& f, const ChainMap& phi);

ModuleMap induced_map_on_homology(const ChainMap& phi, std::size_t n);
ModuleMap induced_map_on_homology(const ChainMap& phi, std::size_t n, const HomologyObject& hs,
                                  const HomologyObject& ht);

// Decides chain homotopy: whether s_n : C_n -> C'_{n+1} exist with
// f - g = d's + sd as maps (i.e. modulo the target relation lattices).
// One combined integer linear system over all degrees.
bool are_homotopic(const ChainMap& f, const ChainMap& g);

}  // namespace torlim
