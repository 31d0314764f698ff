#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "genred/errors.hpp"

namespace genred {

using Int = mpz_class;
using Rat = mpq_class;

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMat from_rows_int(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    // this == c * I ?
    bool is_scalar(Int& c_out) const;

    IntMat power(unsigned long k) const;

    // Bareiss fraction-free determinant; matrix must be square.
    Int det() const;

    // Leading principal minor of order k (determinant of the top-left k x k block).
    Int leading_minor(std::size_t k) const;

    // Total ordering for canonical sorting (shape, then entries).
    int compare(const IntMat& o) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    // Submatrix by row/column index selections.
    IntMat select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    static IntMat block_diag(const IntMat& a, const IntMat& b);
    static IntMat hstack(const IntMat& a, const IntMat& b);
    static IntMat vstack(const IntMat& a, const IntMat& b);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Solve X * B = N over the integers for square nonsingular B.
// Returns nullopt if B is singular or the rational solution is not integral.
std::optional<IntMat> solve_right_integral(const IntMat& N, const IntMat& B);

// Solve B * X = N over the integers for square nonsingular B.
std::optional<IntMat> solve_left_integral(const IntMat& B, const IntMat& N);

// Basis of {x : M x = 0} as columns of an n x k integer matrix.
IntMat kernel_basis(const IntMat& M);

// Column-style Hermite reduction: basis of the column lattice of M,
// returned as columns of an n x rank matrix (echelon form, deterministic).
IntMat column_lattice_basis(const IntMat& M);

// Exact rational matrix used in a few cold paths (chamber descent, inverses).
class RatMat {
  public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    explicit RatMat(const IntMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMat operator*(const RatMat& o) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    // Gauss-Jordan inverse; nullopt when singular.
    std::optional<RatMat> inverse() const;

    // If every entry is integral, return the integer matrix.
    std::optional<IntMat> to_int() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// One rational solution of K x = rhs (free variables set to 0); nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const IntMat& K, const std::vector<Rat>& rhs);

}  // namespace genred
