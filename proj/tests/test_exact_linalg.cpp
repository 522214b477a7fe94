#include <doctest.h>

#include "torlim/int_matrix.hpp"
#include "torlim/rng.hpp"
#include "torlim/smith.hpp"

using namespace torlim;

namespace {

IntMatrix random_matrix(SeededRng& rng, std::size_t max_dim, long bound) {
    std::size_t r = rng.below(max_dim + 1);
    std::size_t c = rng.below(max_dim + 1);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.range(-bound, bound);
    return m;
}

void check_smith_invariants(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    CHECK(multiply_serial(multiply_serial(s.u, a), s.v) == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(multiply_serial(s.u, s.u_inv).is_identity());
    CHECK(multiply_serial(s.v, s.v_inv).is_identity());
    const std::size_t k = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < k; ++i) CHECK(s.diagonal[i] >= 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (s.diagonal[i] == 0) {
            CHECK(s.diagonal[i + 1] == 0);  // zeros trail
        } else {
            CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
    }
    // off-diagonal of d is zero everywhere
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the worked example") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(a);
    // d1 = gcd of the entries = 2, d1*d2 = |det| = 8
    CHECK(s.diagonal == std::vector<Int>{2, 4});
    check_smith_invariants(a);
}

TEST_CASE("smith normal form trivial cases") {
    SmithDecomposition id2 = smith_normal_form(IntMatrix::identity(2));
    CHECK(id2.diagonal == std::vector<Int>{1, 1});

    SmithDecomposition z23 = smith_normal_form(IntMatrix(2, 3));
    CHECK(z23.diagonal == std::vector<Int>{0, 0});

    SmithDecomposition empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.diagonal.empty());
    SmithDecomposition wide = smith_normal_form(IntMatrix(0, 3));
    CHECK(wide.diagonal.empty());
    CHECK(wide.v.is_identity());
}

TEST_CASE("smith normal form is deterministic") {
    SeededRng rng(11);
    for (int t = 0; t < 10; ++t) {
        IntMatrix a = random_matrix(rng, 6, 30);
        SmithDecomposition s1 = smith_normal_form(a);
        SmithDecomposition s2 = smith_normal_form(a);
        CHECK(s1.u == s2.u);
        CHECK(s1.v == s2.v);
        CHECK(s1.d == s2.d);
    }
}

TEST_CASE("smith invariants over random matrices") {
    SeededRng rng(5);
    for (int t = 0; t < 60; ++t) check_smith_invariants(random_matrix(rng, 8, 50));
}

TEST_CASE("kernel basis annihilates and is saturated") {
    IntMatrix a = IntMatrix::from_rows({{2, 3}});
    IntMatrix k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK(multiply_serial(a, k).is_zero());
    // the generator is ±(3, -2)
    CHECK(abs(k.at(0, 0)) == 3);
    CHECK(abs(k.at(1, 0)) == 2);

    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    IntMatrix z12 = IntMatrix(1, 2);
    CHECK(kernel_basis(z12).cols() == 2);

    // saturation: small integer solutions are integer combinations of the basis
    SeededRng rng(17);
    for (int t = 0; t < 25; ++t) {
        IntMatrix m = random_matrix(rng, 5, 9);
        IntMatrix kb = kernel_basis(m);
        CHECK(multiply_serial(m, kb).is_zero());
        // brute-force small kernel vectors
        if (m.cols() == 0 || m.cols() > 4) continue;
        std::vector<long> v(m.cols(), -2);
        for (;;) {
            std::vector<Int> x(m.cols());
            for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
            bool in_kernel = true;
            for (const Int& e : mat_vec(m, x))
                if (e != 0) in_kernel = false;
            if (in_kernel) CHECK(solve(kb, x).has_value());
            std::size_t i = 0;
            while (i < v.size() && v[i] == 2) v[i++] = -2;
            if (i == v.size()) break;
            ++v[i];
        }
    }
}

TEST_CASE("solve returns exact representatives or nothing") {
    auto x = solve(IntMatrix::from_rows({{2}}), {Int(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);

    CHECK_FALSE(solve(IntMatrix::from_rows({{2}}), {Int(3)}).has_value());

    IntMatrix a = IntMatrix::from_rows({{2, 3}});
    auto y = solve(a, {Int(1)});
    REQUIRE(y.has_value());
    CHECK(2 * (*y)[0] + 3 * (*y)[1] == 1);

    // empty shapes: a 0xN system is satisfied by the zero vector
    auto e = solve(IntMatrix(0, 3), {});
    REQUIRE(e.has_value());
    CHECK(e->size() == 3);
    // an Nx0 system is solvable only for b = 0
    CHECK(solve(IntMatrix(2, 0), {Int(0), Int(0)}).has_value());
    CHECK_FALSE(solve(IntMatrix(2, 0), {Int(1), Int(0)}).has_value());

    SeededRng rng(23);
    for (int t = 0; t < 40; ++t) {
        IntMatrix m = random_matrix(rng, 6, 12);
        std::vector<Int> target(m.rows());
        for (auto& e : target) e = rng.range(-20, 20);
        auto sol = solve(m, target);
        if (sol) CHECK(mat_vec(m, *sol) == target);
        // solvable systems built from a known solution must be solved
        std::vector<Int> known(m.cols());
        for (auto& e : known) e = rng.range(-5, 5);
        auto sol2 = solve(m, mat_vec(m, known));
        REQUIRE(sol2.has_value());
        CHECK(mat_vec(m, *sol2) == mat_vec(m, known));
    }
}

TEST_CASE("column hermite basis spans the same lattice canonically") {
    SeededRng rng(31);
    for (int t = 0; t < 30; ++t) {
        IntMatrix g = random_matrix(rng, 5, 8);
        IntMatrix h = column_hermite_basis(g);
        // mutual containment
        for (std::size_t j = 0; j < g.cols(); ++j) CHECK(solve(h, g.column(j)).has_value());
        for (std::size_t j = 0; j < h.cols(); ++j) CHECK(solve(g, h.column(j)).has_value());
        // canonical: re-running on a shuffled generating set gives the same basis
        IntMatrix doubled = hstack(g, h);
        CHECK(column_hermite_basis(doubled) == h);
        // independence: t columns of rank t
        CHECK(kernel_basis(h).cols() == 0);
    }
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    // row swaps flip sign
    CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("kronecker product shape and content") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    IntMatrix i2 = IntMatrix::identity(2);
    IntMatrix k = kronecker(a, i2);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 4);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 1) == 1);
    CHECK(k.at(0, 2) == 2);
    CHECK(k.at(2, 0) == 3);
    CHECK(k.at(3, 3) == 4);
    CHECK(k.at(0, 1) == 0);
}
