#include <doctest.h>

#include "torlim/checks.hpp"
#include "torlim/errors.hpp"
#include "torlim/resolution.hpp"
#include "torlim/rng.hpp"

using namespace torlim;

namespace {

FpModule z_mod(long n) { return FpModule(1, IntMatrix::from_rows({{n}})); }

}  // namespace

TEST_CASE("canonical resolution reads off the presentation") {
    FreeResolution r4 = canonical_resolution(z_mod(4));
    CHECK(r4.length() == 1);
    CHECK(r4.complex.object(0).generators() == 1);
    CHECK(r4.complex.object(1).generators() == 1);
    CHECK(r4.complex.differential(1).matrix().at(0, 0) == 4);
    CHECK(r4.augmentation.matrix().is_identity());
    CHECK(is_resolution(r4, z_mod(4)));

    // free module: length 0
    FreeResolution rz = canonical_resolution(free_module(1));
    CHECK(rz.length() == 0);
    CHECK(is_resolution(rz, free_module(1)));

    // redundant relations are removed by the normal form
    FpModule redundant(1, IntMatrix::from_rows({{2}, {2}, {4}}));
    FreeResolution rr = canonical_resolution(redundant);
    CHECK(rr.length() == 1);
    CHECK(rr.complex.object(1).generators() == 1);
    CHECK(rr.complex.differential(1).matrix().at(0, 0) == 2);
    CHECK(is_resolution(rr, redundant));

    FpModule sum(2, IntMatrix::from_rows({{4, 0}, {0, 6}}));
    FreeResolution rs = canonical_resolution(sum);
    CHECK(rs.length() == 1);
    CHECK(rs.complex.object(1).generators() == 2);
    CHECK(is_resolution(rs, sum));

    // the zero module resolves by the empty free module
    FreeResolution r0 = canonical_resolution(zero_module());
    CHECK(r0.length() == 0);
    CHECK(is_resolution(r0, zero_module()));
}

TEST_CASE("is_resolution rejects wrong augmentations and non-exact complexes") {
    // [0 -> Z --x2--> Z] with augmentation onto Z/4: ker ε = (4) but im d1 = (2)
    FpModule z = free_module(1);
    FpModule z4 = z_mod(4);
    ChainComplex c({z, z}, {ModuleMap(z, z, IntMatrix::from_rows({{2}}))});
    FreeResolution wrong{c, ModuleMap(z, z4, IntMatrix::identity(1))};
    CHECK_FALSE(is_resolution(wrong, z4));
    // also fails against a different module than the augmentation target
    CHECK_FALSE(is_resolution(canonical_resolution(z4), z_mod(8)));
    // non-free object disqualifies
    ChainComplex nc({z4}, {});
    FreeResolution nonfree{nc, identity_map(z4)};
    CHECK_FALSE(is_resolution(nonfree, z4));
    // non-surjective augmentation
    FreeResolution notonto{ChainComplex({z, z}, {ModuleMap(z, z, IntMatrix::from_rows({{4}}))}),
                           ModuleMap(z, z4, IntMatrix::from_rows({{2}}))};
    CHECK_FALSE(is_resolution(notonto, z4));
}

TEST_CASE("resolution families are deterministic, exact, of equal rank") {
    FpModule m = z_mod(4);
    ResolutionFamily one = resolution_family(m, 1, 7);
    CHECK(one.members.size() == 1);

    ResolutionFamily fam = resolution_family(m, 3, 7);
    CHECK(fam.members.size() == 3);
    CHECK(fam.rank_measure == std::make_pair(std::size_t{1}, std::size_t{2}));
    for (const FreeResolution& member : fam.members) {
        CHECK(is_resolution(member, m));
        CHECK(member.rank_measure() == fam.rank_measure);
    }

    ResolutionFamily again = resolution_family(m, 3, 7);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(fam.members[i].complex == again.members[i].complex);
        CHECK(fam.members[i].augmentation.matrix() == again.members[i].augmentation.matrix());
    }
    // different seeds twist differently once the orbit is large enough
    FpModule big(2, IntMatrix::from_rows({{4, 0}, {0, 6}}));
    ResolutionFamily fam7 = resolution_family(big, 3, 7);
    ResolutionFamily fam8 = resolution_family(big, 3, 8);
    bool any_different = false;
    for (std::size_t i = 1; i < 3; ++i)
        any_different = any_different || !(fam7.members[i].complex == fam8.members[i].complex);
    CHECK(any_different);
}

TEST_CASE("family generation copes with tiny twist orbits") {
    // Z has exactly two distinct rank-(0,1) resolutions; requesting five
    // falls back to repeats, all exact.
    ResolutionFamily fam = resolution_family(free_module(1), 5, 3);
    CHECK(fam.members.size() == 5);
    for (const FreeResolution& member : fam.members) CHECK(is_resolution(member, free_module(1)));

    ResolutionFamily zfam = resolution_family(zero_module(), 3, 3);
    CHECK(zfam.members.size() == 3);
}

TEST_CASE("twists and padding preserve exactness") {
    SeededRng rng(67);
    for (int t = 0; t < 10; ++t) {
        FpModule m = checks::random_module(rng, 3, 10);
        FreeResolution p = canonical_resolution(m);
        FreeResolution twisted = twist_resolution(p, rng.next());
        CHECK(is_resolution(twisted, m));
        FreeResolution padded = pad_resolution_to(p, 3);
        CHECK(padded.length() == 3);
        CHECK(is_resolution(padded, m));
        CHECK(is_resolution(twist_resolution(padded, rng.next()), m));
        FreeResolution odd = pad_resolution_to(p, p.length() + 1);
        CHECK(is_resolution(odd, m));
    }
}

TEST_CASE("lift of x2: Z/2 -> Z/4 over canonical resolutions is (x2, x1)") {
    FpModule z2 = z_mod(2), z4 = z_mod(4);
    ModuleMap f(z2, z4, IntMatrix::from_rows({{2}}));
    FreeResolution p = canonical_resolution(z2);
    FreeResolution q = canonical_resolution(z4);
    ChainMap lift = lift_map(f, p, q);
    CHECK(lift.component(0).matrix().at(0, 0) == 2);  // ε-square forces f0 ≡ 2 mod 4
    CHECK(lift.component(1).matrix().at(0, 0) == 1);  // 2·2 = 4·f1
}

TEST_CASE("lift of the identity is homotopic to the identity chain map") {
    SeededRng rng(71);
    for (int t = 0; t < 8; ++t) {
        FpModule m = checks::random_module(rng, 3, 10);
        FreeResolution p = canonical_resolution(m);
        ChainMap lift = lift_map(identity_map(m), p, p);
        CHECK(are_homotopic(lift, identity_chain_map(p.complex)));
        ChainMap zero_lift = lift_map(zero_map(m, m), p, p);
        CHECK(are_homotopic(zero_lift, zero_chain_map(p.complex, p.complex)));
    }
}

TEST_CASE("any two lifts are homotopic (perturbed representatives)") {
    SeededRng rng(73);
    for (int t = 0; t < 10; ++t) {
        FpModule m = checks::random_module(rng, 3, 10);
        FpModule n = checks::random_module(rng, 3, 10);
        ModuleMap f = checks::random_map(rng, m, n);
        FreeResolution p = checks::random_external_resolution(rng, m, true);
        FreeResolution q = checks::random_external_resolution(rng, n, true);
        ChainMap canonical = lift_map(f, p, q);
        ChainMap other = lift_map_perturbed(f, p, q, rng.next());
        CHECK(are_homotopic(canonical, other));
        // the ε-square holds for both
        for (const ChainMap* lift : {&canonical, &other})
            CHECK(maps_equal(compose(q.augmentation, lift->component(0)),
                             compose(f, p.augmentation)));
    }
}

TEST_CASE("lifts across resolutions of different lengths") {
    FpModule z2 = z_mod(2), z4 = z_mod(4);
    ModuleMap f(z2, z4, IntMatrix::from_rows({{2}}));
    FreeResolution p = pad_resolution_to(canonical_resolution(z2), 3);
    FreeResolution q = canonical_resolution(z4);
    ChainMap down = lift_map(f, p, q);  // longer source than target
    CHECK(down.component(0).matrix().at(0, 0) == 2);
    ModuleMap back(z4, z2, IntMatrix::from_rows({{1}}));
    ChainMap up = lift_map(back, canonical_resolution(z4), p);  // shorter source
    CHECK(maps_equal(compose(p.augmentation, up.component(0)),
                     compose(back, canonical_resolution(z4).augmentation)));
}
