#include <doctest.h>

#include "torlim/chain_complex.hpp"
#include "torlim/checks.hpp"
#include "torlim/errors.hpp"
#include "torlim/rng.hpp"

using namespace torlim;

namespace {

FpModule z_mod(long n) { return FpModule(1, IntMatrix::from_rows({{n}})); }

// 0 -> Z --(x m)--> Z -> 0
ChainComplex times_m_on_z(long m) {
    FpModule z = free_module(1);
    return ChainComplex({z, z}, {ModuleMap(z, z, IntMatrix::from_rows({{m}}))});
}

CanonicalForm cf(std::vector<long> torsion, std::size_t free_rank) {
    CanonicalForm out;
    for (long t : torsion) out.torsion.emplace_back(t);
    out.free_rank = free_rank;
    return out;
}

}  // namespace

TEST_CASE("complex construction validates d∘d = 0") {
    CHECK_NOTHROW(times_m_on_z(4));
    FpModule z = free_module(1);
    ModuleMap two(z, z, IntMatrix::from_rows({{2}}));
    CHECK_THROWS_AS(ChainComplex({z, z, z}, {two, two}), NotAComplex);
    // all-zero differentials are always a complex
    FpModule m(2, IntMatrix::from_rows({{4, 0}, {0, 6}}));
    CHECK_NOTHROW(ChainComplex({m, m}, {zero_map(m, m)}));
}

TEST_CASE("homology of multiplication by 4 on Z") {
    ChainComplex c = times_m_on_z(4);
    CHECK(homology(c, 0).group.canonical_form() == cf({4}, 0));
    CHECK(homology(c, 1).group.canonical_form() == cf({}, 0));
    CHECK(homology(c, 2).group.canonical_form() == cf({}, 0));  // beyond the top degree
}

TEST_CASE("homology with zero differentials reproduces the objects") {
    FpModule m(2, IntMatrix::from_rows({{4, 0}, {0, 6}}));
    ChainComplex c({m, m}, {zero_map(m, m)});
    for (std::size_t n = 0; n <= 1; ++n) {
        HomologyObject h = homology(c, n);
        CHECK(h.group.canonical_form() == m.canonical_form());
        // identified with C_n by an isomorphism on the cycle basis
        CHECK(is_isomorphism(ModuleMap(h.group, m, h.cycles_basis)));
    }
}

TEST_CASE("exact complexes have trivial homology in every degree") {
    FpModule z = free_module(1);
    ChainComplex c = times_m_on_z(1);
    CHECK(homology(c, 0).group.canonical_form().is_trivial());
    CHECK(homology(c, 1).group.canonical_form().is_trivial());

    // padded: 0 -> Z --id--> Z --0--> Z --id--> Z -> 0
    ModuleMap id(z, z, IntMatrix::from_rows({{1}}));
    ChainComplex padded({z, z, z, z}, {id, zero_map(z, z), id});
    for (std::size_t n = 0; n <= 3; ++n)
        CHECK(homology(padded, n).group.canonical_form().is_trivial());
}

TEST_CASE("induced map example: the (2,1)-lift of x2 tensored with Z/4") {
    // F(P): 0 -> Z/4 --(x2)--> Z/4,  F(Q): 0 -> Z/4 --(x4 = 0)--> Z/4
    FpModule z4 = z_mod(4);
    ChainComplex fp({z4, z4}, {ModuleMap(z4, z4, IntMatrix::from_rows({{2}}))});
    ChainComplex fq({z4, z4}, {ModuleMap(z4, z4, IntMatrix::from_rows({{4}}))});
    // chain map with components (x2, x1)
    ChainMap phi(fp, fq,
                 {ModuleMap(z4, z4, IntMatrix::from_rows({{2}})),
                  ModuleMap(z4, z4, IntMatrix::from_rows({{1}}))});
    HomologyObject h1p = homology(fp, 1);
    HomologyObject h1q = homology(fq, 1);
    CHECK(h1p.group.canonical_form() == cf({2}, 0));  // ker(x2) on Z/4 = {0,2}
    CHECK(h1q.group.canonical_form() == cf({4}, 0));  // ker(0) on Z/4 = everything
    ModuleMap induced = induced_map_on_homology(phi, 1, h1p, h1q);
    IntMatrix c = canonical_matrix(induced);
    REQUIRE(c.rows() == 1);
    REQUIRE(c.cols() == 1);
    CHECK(c.at(0, 0) == 2);  // the injection x -> 2x
    CHECK(is_injective(induced));
}

TEST_CASE("induced maps are functorial") {
    SeededRng rng(59);
    for (int t = 0; t < 8; ++t) {
        FpModule a = checks::random_module(rng, 2, 8);
        FpModule b = checks::random_module(rng, 2, 8);
        // complexes with zero differentials make every pair of maps a chain map
        ChainComplex ca({a, a}, {zero_map(a, a)});
        ChainComplex cb({b, b}, {zero_map(b, b)});
        ModuleMap f0 = checks::random_map(rng, a, b);
        ModuleMap f1 = checks::random_map(rng, a, b);
        ChainMap phi(ca, cb, {f0, f1});
        ChainMap back(cb, ca, {checks::random_map(rng, b, a), checks::random_map(rng, b, a)});
        for (std::size_t n = 0; n <= 1; ++n) {
            ModuleMap lhs = induced_map_on_homology(compose(back, phi), n);
            ModuleMap rhs = compose(induced_map_on_homology(back, n), induced_map_on_homology(phi, n));
            CHECK(maps_equal(lhs, rhs));
            CHECK(maps_equal(induced_map_on_homology(identity_chain_map(ca), n),
                             identity_map(homology(ca, n).group)));
        }
    }
}

TEST_CASE("homotopy: identity and zero are homotopic on a contractible complex") {
    ChainComplex c = times_m_on_z(1);  // 0 -> Z --id--> Z -> 0
    CHECK(are_homotopic(identity_chain_map(c), zero_chain_map(c, c)));

    // but not on one with homology
    ChainComplex c4 = times_m_on_z(4);
    CHECK_FALSE(are_homotopic(identity_chain_map(c4), zero_chain_map(c4, c4)));
    CHECK(are_homotopic(identity_chain_map(c4), identity_chain_map(c4)));
}

TEST_CASE("homotopic chain maps induce equal maps on homology") {
    SeededRng rng(61);
    FpModule z = free_module(1);
    for (int t = 0; t < 6; ++t) {
        // f = d's + sd is null-homotopic by construction
        ChainComplex c = times_m_on_z(rng.range(2, 9));
        ChainComplex d = times_m_on_z(rng.range(2, 9));
        long s0 = rng.range(-3, 3);
        long dm = d.differential(1).matrix().at(0, 0).get_si();
        long cm = c.differential(1).matrix().at(0, 0).get_si();
        ModuleMap f0(z, z, IntMatrix::from_rows({{dm * s0}}));
        ModuleMap f1(z, z, IntMatrix::from_rows({{s0 * cm}}));
        ChainMap null_homotopic(c, d, {f0, f1});
        ChainMap zero = zero_chain_map(c, d);
        CHECK(are_homotopic(null_homotopic, zero));
        for (std::size_t n = 0; n <= 1; ++n)
            CHECK(maps_equal(induced_map_on_homology(null_homotopic, n),
                             induced_map_on_homology(zero, n)));
    }
}

TEST_CASE("apply_functor: tensor transports complexes") {
    FpModule z6 = z_mod(6);
    ChainComplex c = times_m_on_z(4);
    TensorFunctor func(z6);
    ChainComplex fc = apply_functor(func, c);
    CHECK(fc.length() == 1);
    CHECK(fc.object(0).canonical_form() == cf({6}, 0));
    CHECK(fc.object(1).canonical_form() == cf({6}, 0));
    CHECK(fc.differential(1).matrix().at(0, 0) == 4);
    // unit parameter: identical presentations
    TensorFunctor unit(free_module(1));
    CHECK(apply_functor(unit, c) == c);
    // zero complex
    ChainComplex zc({zero_module()}, {});
    CHECK(apply_functor(func, zc).object(0).generators() == 0);
}
