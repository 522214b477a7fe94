#include "torlim/derived.hpp"

#include <stdexcept>

#include "torlim/errors.hpp"
#include "torlim/parallel.hpp"
#include "torlim/rng.hpp"

namespace torlim {

ModuleMap comparison_map(const Functor& func, const ModuleMap& f, const FreeResolution& p,
                         const FreeResolution& q, std::size_t n) {
    ChainMap lifted = lift_map(f, p, q);
    ChainMap applied = apply_functor(func, lifted);
    return induced_map_on_homology(applied, n);
}

IsoSystem canonical_iso_system(const Functor& func, const ResolutionFamily& family, std::size_t n) {
    const std::size_t k = family.members.size();
    IsoSystem sys;
    sys.family = family;
    sys.degree = n;
    sys.homologies.resize(k, HomologyObject{});
    parallel::parallel_for(k, [&](std::size_t i) {
        sys.homologies[i] = homology(apply_functor(func, family.members[i].complex), n);
    });

    // All k^2 comparison maps for the identity; each pair is independent work.
    ModuleMap placeholder = zero_map(zero_module(), zero_module());
    sys.isos.assign(k * k, placeholder);
    ModuleMap id_m = identity_map(family.module);
    parallel::parallel_for(k * k, [&](std::size_t idx) {
        const std::size_t i = idx / k, j = idx % k;
        ChainMap lifted = lift_map(id_m, family.members[i], family.members[j]);
        sys.isos[idx] = induced_map_on_homology(apply_functor(func, lifted), n, sys.homologies[i],
                                                sys.homologies[j]);
    });

    verify_iso_system_laws(sys);
    return sys;
}

void verify_iso_system_laws(const IsoSystem& sys) {
    const std::size_t k = sys.size();
    for (std::size_t i = 0; i < k; ++i)
        if (!maps_equal(sys.iso(i, i), identity_map(sys.homologies[i].group)))
            throw CocycleViolation("iso(" + std::to_string(i) + "," + std::to_string(i) +
                                   ") is not the identity");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < k; ++l)
                if (!maps_equal(compose(sys.iso(j, l), sys.iso(i, j)), sys.iso(i, l)))
                    throw CocycleViolation("cocycle law fails at (" + std::to_string(i) + "," +
                                           std::to_string(j) + "," + std::to_string(l) + ")");
            if (!maps_equal(compose(sys.iso(j, i), sys.iso(i, j)), identity_map(sys.homologies[i].group)))
                throw CocycleViolation("inverse law fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
}

std::uint64_t family_seed(const FpModule& m, std::uint64_t seed) { return mix_seed(seed, m.digest()); }

DerivedValue derived_object(const Functor& func, const FpModule& m, std::size_t n, std::size_t k,
                            std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("derived_object: family size must be >= 1");
    ResolutionFamily family = resolution_family(m, k, family_seed(m, seed));
    IsoSystem sys = canonical_iso_system(func, family, n);
    std::vector<FpModule> nodes;
    for (const HomologyObject& h : sys.homologies) nodes.push_back(h.group);
    IsoDiagram diagram(std::move(nodes), sys.isos);
    LimitObject lim = limit(diagram);
    return DerivedValue{m, n, k, seed, std::move(sys), std::move(lim)};
}

DerivedMap derived_map(const Functor& func, const ModuleMap& f, std::size_t n, std::size_t k,
                       std::uint64_t seed) {
    DerivedValue source = derived_object(func, f.source(), n, k, seed);
    DerivedValue target = derived_object(func, f.target(), n, k, seed);
    const std::size_t ks = source.system.size(), kt = target.system.size();

    // Comparison maps from every source member to every target member.
    ModuleMap placeholder = zero_map(zero_module(), zero_module());
    std::vector<ModuleMap> grid(ks * kt, placeholder);
    parallel::parallel_for(ks * kt, [&](std::size_t idx) {
        const std::size_t i = idx / kt, j = idx % kt;
        ChainMap lifted = lift_map(f, source.system.family.members[i], target.system.family.members[j]);
        grid[idx] = induced_map_on_homology(apply_functor(func, lifted), n,
                                            source.system.homologies[i], target.system.homologies[j]);
    });

    // Each row is a compatible cone over the target diagram (the coherence law
    // for change of target resolution); map_into_limit checks it exactly.
    std::vector<ModuleMap> mediated;
    for (std::size_t i = 0; i < ks; ++i) {
        std::vector<ModuleMap> row(grid.begin() + i * kt, grid.begin() + (i + 1) * kt);
        mediated.push_back(map_into_limit(target.limit, row));
    }
    // Independence of the source member: mediated_j ∘ iso(i,j) = mediated_i.
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < ks; ++j)
            if (!maps_equal(compose(mediated[j], source.system.iso(i, j)), mediated[i]))
                throw IncompatibleComponents("derived map depends on the source member at (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");

    ModuleMap result = compose(mediated[0], source.limit.projections[0]);
    for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < kt; ++j)
            internal_check(maps_equal(compose(target.limit.projections[j], result),
                                      compose(grid[i * kt + j], source.limit.projections[i])),
                           "derived_map: projection square fails");
    return DerivedMap{std::move(source), std::move(target), std::move(result)};
}

bool compose_check(const Functor& func, const ModuleMap& f, const ModuleMap& g, std::size_t n,
                   std::size_t k, std::uint64_t seed) {
    if (f.target() != g.source()) throw std::invalid_argument("compose_check: maps are not composable");
    DerivedMap df = derived_map(func, f, n, k, seed);
    DerivedMap dg = derived_map(func, g, n, k, seed);
    DerivedMap dgf = derived_map(func, compose(g, f), n, k, seed);
    if (!maps_equal(dgf.map, compose(dg.map, df.map))) return false;

    // Comparison-map composition law on the canonical members.
    const FreeResolution& p = df.source.system.family.members[0];
    const FreeResolution& q = df.target.system.family.members[0];
    const FreeResolution& r = dg.target.system.family.members[0];
    ModuleMap through = compose(comparison_map(func, g, q, r, n), comparison_map(func, f, p, q, n));
    return maps_equal(through, comparison_map(func, compose(g, f), p, r, n));
}

ModuleMap compare_external(const Functor& func, const FpModule& m, std::size_t n, std::size_t k,
                           std::uint64_t seed, const FreeResolution& q) {
    if (!is_resolution(q, m)) throw NotAResolution("compare_external: Q does not resolve M");
    DerivedValue dv = derived_object(func, m, n, k, seed);
    ModuleMap id_m = identity_map(m);
    HomologyObject hq = homology(apply_functor(func, q.complex), n);
    const std::size_t kf = dv.system.size();
    ModuleMap placeholder = zero_map(zero_module(), zero_module());
    std::vector<ModuleMap> components(kf, placeholder);
    parallel::parallel_for(kf, [&](std::size_t i) {
        ChainMap lifted = lift_map(id_m, q, dv.system.family.members[i]);
        components[i] = induced_map_on_homology(apply_functor(func, lifted), n, hq,
                                                dv.system.homologies[i]);
    });
    ModuleMap u = map_into_limit(dv.limit, components);
    internal_check(is_isomorphism(u), "compare_external: comparison map is not an isomorphism");
    return u;
}

ModuleMap epsilon_comparison(const Functor& func, const DerivedValue& dv) {
    internal_check(dv.degree == 0, "epsilon_comparison: degree must be 0");
    FpModule fm = func.on_object(dv.module);
    std::vector<ModuleMap> candidates;
    for (std::size_t i = 0; i < dv.system.size(); ++i) {
        ModuleMap f_eps = func.on_map(dv.system.family.members[i].augmentation);
        ModuleMap cls_to_fm(dv.system.homologies[i].group, fm,
                            f_eps.matrix() * dv.system.homologies[i].cycles_basis);
        candidates.push_back(compose(cls_to_fm, dv.limit.projections[i]));
    }
    for (std::size_t i = 1; i < candidates.size(); ++i)
        internal_check(maps_equal(candidates[i], candidates[0]),
                       "epsilon_comparison: members disagree");
    return candidates[0];
}

}  // namespace torlim
