#pragma once

#include <cstdint>
#include <vector>

#include "torlim/chain_complex.hpp"
#include "torlim/functor.hpp"
#include "torlim/limit.hpp"
#include "torlim/resolution.hpp"

namespace torlim {

// The canonical isomorphisms between the homologies of F applied to the
// members of a resolution family, one per ordered pair of members:
// iso(i,j) : H_n(F(P^i)) -> H_n(F(P^j)), induced by lifting the identity.
// Construction computes all pairs (the diagonal included) and verifies the
// identity, cocycle and inverse laws exactly before returning
// (CocycleViolation otherwise — a coherence failure is never repaired).
struct IsoSystem {
    ResolutionFamily family;
    std::size_t degree;
    std::vector<HomologyObject> homologies;
    std::vector<ModuleMap> isos;  // row-major by (i, j)

    std::size_t size() const { return homologies.size(); }
    const ModuleMap& iso(std::size_t i, std::size_t j) const { return isos.at(i * size() + j); }
};

// L_n(F)(M) realized as the limit of the iso-diagram of member homologies.
struct DerivedValue {
    FpModule module;
    std::size_t degree;
    std::size_t family_size;
    std::uint64_t seed;  // user seed; the family seed is derived from it
    IsoSystem system;
    LimitObject limit;
};

// L_n(F)(f) between limit groups, commuting with every projection through the
// corresponding comparison maps.
struct DerivedMap {
    DerivedValue source, target;
    ModuleMap map;
};

// The map H_n(F(P)) -> H_n(F(Q)) induced by any lift of f to a chain map
// P -> Q; independent of the lift by homotopy invariance.
ModuleMap comparison_map(const Functor& func, const ModuleMap& f, const FreeResolution& p,
                         const FreeResolution& q, std::size_t n);

IsoSystem canonical_iso_system(const Functor& func, const ResolutionFamily& family, std::size_t n);

// The law checker canonical_iso_system runs before returning, exposed on its
// own so a tampered system can be re-checked (fault injection must be caught
// by exactly this code path).
void verify_iso_system_laws(const IsoSystem& sys);

// Effective seed for a module's resolution family: the user seed mixed with a
// digest of the presentation, so source and target of a map each get their own
// independently derived family.
std::uint64_t family_seed(const FpModule& m, std::uint64_t seed);

DerivedValue derived_object(const Functor& func, const FpModule& m, std::size_t n, std::size_t k,
                            std::uint64_t seed);

DerivedMap derived_map(const Functor& func, const ModuleMap& f, std::size_t n, std::size_t k,
                       std::uint64_t seed);

// Functor laws at the derived level: derived_map(g∘f) = derived_map(g) ∘
// derived_map(f), plus the comparison-map composition law on the canonical
// family members.
bool compose_check(const Functor& func, const ModuleMap& f, const ModuleMap& g, std::size_t n,
                   std::size_t k, std::uint64_t seed);

// Resolution independence: the canonical isomorphism H_n(F(Q)) -> L_n(F)(M)
// for any verified resolution Q of M (twisted or padded resolutions welcome).
// Throws NotAResolution if Q fails verification.
ModuleMap compare_external(const Functor& func, const FpModule& m, std::size_t n, std::size_t k,
                           std::uint64_t seed, const FreeResolution& q);

// The augmentation-induced comparison L_0(F)(M) -> F(M); an isomorphism for
// every right exact functor. Requires dv.degree == 0.
ModuleMap epsilon_comparison(const Functor& func, const DerivedValue& dv);

}  // namespace torlim
