#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torlim {

using Int = mpz_class;

// Dense arbitrary-precision integer matrix, row-major. Empty shapes
// (0 rows and/or 0 columns) are first-class: they present zero maps to and
// from the trivial group and show up constantly in boundary conventions.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transpose() const;
    IntMatrix operator-() const;

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

    // Elementary operations (used by the normal-form routines).
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void row_axpy(std::size_t i, std::size_t j, const Int& c);  // row_i += c * row_j
    void col_axpy(std::size_t j, std::size_t i, const Int& c);  // col_j += c * col_i

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Product kernels. multiply_serial is the reference implementation;
// multiply_parallel is the OpenMP kernel (each output entry is owned by one
// task, so both produce bit-identical results). operator* dispatches on size.
IntMatrix multiply_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix multiply_parallel(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant; exact.
Int determinant(const IntMatrix& a);

// Canonical basis of the lattice spanned by the columns of g: the column-style
// Hermite normal form with zero columns dropped. Pivots are positive, entries
// left of a pivot are reduced into [0, pivot). Deterministic and canonical:
// two generating sets of the same lattice yield the same basis matrix.
IntMatrix column_hermite_basis(const IntMatrix& g);

}  // namespace torlim
