#include "torlim/smith.hpp"

#include <stdexcept>

namespace torlim {

namespace {

struct Eliminator {
    IntMatrix& d;
    IntMatrix& u;
    IntMatrix& u_inv;
    IntMatrix& v;
    IntMatrix& v_inv;

    // Row ops act as d <- R*d, u <- R*u, u_inv <- u_inv*R^{-1}.
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void negate_row(std::size_t i) {
        d.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    void add_row(std::size_t i, std::size_t j, const Int& c) {  // row_i += c*row_j
        d.row_axpy(i, j, c);
        u.row_axpy(i, j, c);
        u_inv.col_axpy(j, i, -c);
    }
    // Column ops act as d <- d*C, v <- v*C, v_inv <- C^{-1}*v_inv.
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void add_col(std::size_t j, std::size_t i, const Int& c) {  // col_j += c*col_i
        d.col_axpy(j, i, c);
        v.col_axpy(j, i, c);
        v_inv.row_axpy(i, j, -c);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t k = std::min(m, n);

    SmithDecomposition s;
    s.d = a;
    s.u = IntMatrix::identity(m);
    s.u_inv = IntMatrix::identity(m);
    s.v = IntMatrix::identity(n);
    s.v_inv = IntMatrix::identity(n);
    Eliminator e{s.d, s.u, s.u_inv, s.v, s.v_inv};

    for (std::size_t t = 0; t < k; ++t) {
        bool have_pivot = false;
        for (;;) {
            // smallest |entry| != 0 in d[t.., t..], ties by (row, col)
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s.d.at(i, j) == 0) continue;
                    if (pr == m || mpz_cmpabs(s.d.at(i, j).get_mpz_t(), s.d.at(pr, pc).get_mpz_t()) < 0) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == m) break;  // remaining submatrix is zero
            have_pivot = true;
            e.swap_rows(t, pr);
            e.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.d.at(i, t) == 0) continue;
                Int q = s.d.at(i, t) / s.d.at(t, t);
                if (q != 0) e.add_row(i, t, -q);
                if (s.d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.d.at(t, j) == 0) continue;
                Int q = s.d.at(t, j) / s.d.at(t, t);
                if (q != 0) e.add_col(j, t, -q);
                if (s.d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // residues shrank; rescan for a smaller pivot

            // Pivot divides its row and column; enforce divisibility into the
            // remaining block by dragging a bad entry's row into row t.
            std::size_t br = m;
            for (std::size_t i = t + 1; i < m && br == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.d.at(i, j) % s.d.at(t, t) != 0) {
                        br = i;
                        break;
                    }
            if (br == m) break;
            e.add_row(t, br, 1);
        }
        if (have_pivot && s.d.at(t, t) < 0) e.negate_row(t);
        if (!have_pivot) break;
    }

    s.diagonal.resize(k);
    for (std::size_t i = 0; i < k; ++i) s.diagonal[i] = s.d.at(i, i);
    return s;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    const std::size_t n = a.cols();
    const std::size_t k = std::min(a.rows(), n);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= k || s.diagonal[j] == 0) free_cols.push_back(j);
    IntMatrix basis(n, free_cols.size());
    for (std::size_t c = 0; c < free_cols.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, c) = s.v.at(i, free_cols[c]);
    return basis;
}

LinearSolver::LinearSolver(IntMatrix a) : a_(std::move(a)), smith_(smith_normal_form(a_)) {}

std::optional<std::vector<Int>> LinearSolver::solve(const std::vector<Int>& b) const {
    const std::size_t m = a_.rows(), n = a_.cols();
    if (b.size() != m) throw std::invalid_argument("solve: rhs length mismatch");
    const std::size_t k = std::min(m, n);
    std::vector<Int> c = mat_vec(smith_.u, b);
    std::vector<Int> y(n, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (i < k && smith_.diagonal[i] != 0) {
            if (c[i] % smith_.diagonal[i] != 0) return std::nullopt;
            y[i] = c[i] / smith_.diagonal[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(smith_.v, y);
}

std::optional<IntMatrix> LinearSolver::solve_matrix(const IntMatrix& b) const {
    if (b.rows() != a_.rows()) throw std::invalid_argument("solve_matrix: rhs shape mismatch");
    IntMatrix x(a_.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = solve(b.column(j));
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < x.rows(); ++i) x.at(i, j) = (*col)[i];
    }
    return x;
}

std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    return LinearSolver(a).solve(b);
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
    return LinearSolver(a).solve_matrix(b);
}

}  // namespace torlim
