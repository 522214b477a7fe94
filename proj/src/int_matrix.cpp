#include "torlim/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "torlim/parallel.hpp"

namespace torlim {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
    return r;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    IntMatrix s(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) s.at(i, j) = at(row0 + i, col0 + j);
    return s;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::row_axpy(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::col_axpy(std::size_t j, std::size_t i, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) += c * at(k, i);
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << ",";
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ",";
            out << at(i, j).get_str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix add: shape mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sub: shape mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    Int acc, tmp;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                tmp = a.at(i, k) * b.at(k, j);
                acc += tmp;
            }
            r.at(i, j) = acc;
        }
    }
    return r;
}

IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    const std::size_t n = a.rows();
    parallel::parallel_for(n, [&](std::size_t i) {
        Int acc, tmp;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                tmp = a.at(i, k) * b.at(k, j);
                acc += tmp;
            }
            r.at(i, j) = acc;
        }
    });
    return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    // Work estimate: only large products benefit from fan-out.
    const std::size_t work = a.rows() * b.cols() * (a.cols() + 1);
    if (parallel::enabled() && work >= 16384 && a.rows() > 1) return multiply_parallel(a, b);
    return multiply_serial(a, b);
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<Int> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    IntMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        std::size_t pivot = t;
        while (pivot < n && w.at(pivot, t) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != t) {
            w.swap_rows(pivot, t);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i) {
            for (std::size_t j = t + 1; j < n; ++j) {
                Int num = w.at(t, t) * w.at(i, j) - w.at(i, t) * w.at(t, j);
                // Exact by the Bareiss identity.
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, t) = 0;
        }
        prev = w.at(t, t);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix column_hermite_basis(const IntMatrix& g) {
    IntMatrix w = g;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::size_t placed = 0;
    for (std::size_t r = 0; r < rows && placed < cols; ++r) {
        // gcd-eliminate row r across columns [placed, cols)
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = placed; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                if (best == cols || mpz_cmpabs(w.at(r, j).get_mpz_t(), w.at(r, best).get_mpz_t()) < 0) best = j;
            }
            if (best == cols) break;  // row r is zero from `placed` on
            w.swap_cols(placed, best);
            bool cleared = true;
            for (std::size_t j = placed + 1; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                Int q = w.at(r, j) / w.at(r, placed);  // truncated: remainder shrinks
                if (q != 0) w.col_axpy(j, placed, -q);
                if (w.at(r, j) != 0) cleared = false;
            }
            if (cleared) {
                if (w.at(r, placed) < 0) w.negate_col(placed);
                // canonical reduction of earlier columns against this pivot
                for (std::size_t j = 0; j < placed; ++j) {
                    Int q = floor_div(w.at(r, j), w.at(r, placed));
                    if (q != 0) w.col_axpy(j, placed, -q);
                }
                ++placed;
                break;
            }
        }
    }
    return w.submatrix(0, 0, rows, placed);
}

}  // namespace torlim
