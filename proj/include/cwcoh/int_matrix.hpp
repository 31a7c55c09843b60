#ifndef CWCOH_INT_MATRIX_HPP
#define CWCOH_INT_MATRIX_HPP

#include "cwcoh/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwcoh {

/**
 * Dense matrix of arbitrary-precision integers, stored row-major.
 *
 * Matrices with zero rows and/or zero columns are ordinary values; they
 * show up wherever a dimension of a complex has no cells.
 */
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, IntVector entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> diag);
    /// A single column.
    static IntMatrix column_vector(std::span<const Integer> v);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const IntVector& entries() const { return data_; }

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;
    void set_column(std::size_t j, std::span<const Integer> v);

    IntMatrix transpose() const;
    IntMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
    /// Copy with row `i` removed.
    IntMatrix without_row(std::size_t i) const;
    IntMatrix without_column(std::size_t j) const;
    IntMatrix negated() const;
    bool is_zero() const;

    IntVector apply(std::span<const Integer> v) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    // Elementary operations, used by the Smith normal form driver.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += k * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& k);
    /// col_i += k * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVector data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);
std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

/// A = U * S * V with U, V unimodular and S in Smith normal form.
struct SnfResult
{
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    /// Inverses of U and V, produced alongside at no extra asymptotic cost.
    IntMatrix U_inverse;
    IntMatrix V_inverse;

    /// Nonzero diagonal entries of S, in order.
    std::size_t rank() const;
    IntVector diagonal() const;
};

SnfResult snf(const IntMatrix& a);

/// Columns form a Z-basis of { x : a * x = 0 }.
IntMatrix kernel_basis(const IntMatrix& a);

/// Columns form a Z-basis of the lattice spanned by the columns of `a`.
IntMatrix lattice_basis(const IntMatrix& a);

/**
 * Solves a * x = v over the integers through a cached Smith decomposition.
 * With linearly independent columns the solution is unique.
 */
class IntegerSolver
{
public:
    explicit IntegerSolver(IntMatrix a);

    std::optional<IntVector> solve(std::span<const Integer> v) const;
    std::size_t rank() const { return rank_; }
    const IntMatrix& matrix() const { return a_; }

private:
    IntMatrix a_;
    SnfResult snf_;
    std::size_t rank_;
};

/// Coordinates c with basis * c = v; throws NotInLattice otherwise.
IntVector lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v);

bool lattice_contains(const IntMatrix& basis, std::span<const Integer> v);

/// True iff the column spans of `a` and `b` agree as sublattices.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

} // namespace cwcoh

#endif
