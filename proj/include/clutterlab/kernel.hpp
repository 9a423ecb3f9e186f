#pragma once

// Exact integer/rational linear algebra. Everything here is arbitrary precision;
// nothing ever rounds.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clutterlab/error.hpp"

namespace clutterlab {

using Integer = mpz_class;
/// GMP keeps every mpq_class canonical: reduced, positive denominator.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds a matrix from row vectors; every row must have length `cols`.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw UsageError("matrix row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows)
    {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw UsageError("matrix column " + std::to_string(j) + " has wrong length");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    [[nodiscard]] std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    [[nodiscard]] std::vector<T> column_vector(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// ---------------------------------------------------------------------------
// Vector helpers

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

RatVector to_rational(std::span<const Integer> v);
/// Returns nullopt when some entry is not an integer.
std::optional<IntVector> to_integer(std::span<const Rational> v);

RatMatrix to_rational(const IntMatrix& m);

RatVector multiply(const RatMatrix& m, std::span<const Rational> x);
IntVector multiply(const IntMatrix& m, std::span<const Integer> x);

// ---------------------------------------------------------------------------
// Rank, solving, kernels

/// Rank over the rationals (fraction-free Bareiss elimination).
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Rank of the matrix whose rows are `rows`, all of length `dim`.
std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t dim);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(const IntMatrix& m);

/// One exact solution of m·x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Basis of the rational null space {x : m·x = 0}, each vector primitive integral.
/// Deterministic: derived from the reduced row echelon form.
std::vector<IntVector> nullspace(const IntMatrix& m);

struct ScaledVector {
    IntVector vector; ///< primitive integer vector
    Rational scale;   ///< positive; vector == scale · input
};

/// Primitive integer vector parallel to (and with the same orientation as) v.
ScaledVector clear_denominators(const RatVector& v);

// ---------------------------------------------------------------------------
// Integer (lattice) elimination

/// Result of unimodular column reduction: m·transform == echelon, where
/// echelon is in column echelon form with its `rank` nonzero columns first.
struct ColumnEchelon {
    IntMatrix echelon;
    IntMatrix transform; ///< unimodular, cols × cols
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows; ///< pivot row of each nonzero column, increasing
};

ColumnEchelon column_echelon(const IntMatrix& m);

/// Basis of the lattice {x ∈ ℤⁿ : m·x = 0}. The returned vectors extend to a basis of ℤⁿ.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// An integer solution of m·x = b, or nullopt when none exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Formatting

std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);

} // namespace clutterlab
