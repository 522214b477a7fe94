#pragma once

#include <optional>
#include <vector>

#include "torlim/int_matrix.hpp"

namespace torlim {

// u * a * v = d with u, v unimodular and d diagonal, nonnegative entries,
// each dividing the next, zeros trailing. u_inv and v_inv are maintained
// alongside the elimination, so they are exact by construction.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    std::vector<Int> diagonal;  // the min(rows, cols) diagonal entries of d
};

// Deterministic Smith normal form: pivot is the smallest-absolute-value
// nonzero entry of the working submatrix, ties broken by (row, col) order.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Columns form a basis of the lattice {x : a*x = 0}. The basis is saturated:
// it spans a direct summand, so every integer solution is an integer
// combination of the columns.
IntMatrix kernel_basis(const IntMatrix& a);

// Caches one decomposition of `a` and answers a*x = b queries. The returned
// representative is deterministic (free coordinates are set to zero).
class LinearSolver {
public:
    explicit LinearSolver(IntMatrix a);

    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
    // Solves a*X = B column by column; nullopt if any column has no solution.
    std::optional<IntMatrix> solve_matrix(const IntMatrix& b) const;

    const IntMatrix& matrix() const { return a_; }

private:
    IntMatrix a_;
    SmithDecomposition smith_;
};

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b);
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b);

}  // namespace torlim
