#include "cwcoh/int_matrix.hpp"

#include "cwcoh/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace cwcoh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw ShapeMismatch("IntMatrix: entry count does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeMismatch("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::column_vector(std::span<const Integer> v)
{
    return IntMatrix(v.size(), 1, IntVector(v.begin(), v.end()));
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns)
{
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_column(std::size_t j, std::span<const Integer> v)
{
    if (v.size() != rows_) throw ShapeMismatch("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                               std::size_t ncols) const
{
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw ShapeMismatch("submatrix: range out of bounds");
    IntMatrix s(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
    return s;
}

IntMatrix IntMatrix::without_row(std::size_t r) const
{
    IntMatrix s(rows_ - 1, cols_);
    for (std::size_t i = 0, k = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(i, j);
        ++k;
    }
    return s;
}

IntMatrix IntMatrix::without_column(std::size_t c) const
{
    return transpose().without_row(c).transpose();
}

IntMatrix IntMatrix::negated() const
{
    IntMatrix n = *this;
    for (auto& x : n.data_) x = -x;
    return n;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntMatrix::apply(std::span<const Integer> v) const
{
    if (v.size() != cols_) throw ShapeMismatch("apply: vector length mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) acc += (*this)(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw ShapeMismatch("matrix product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum: shape mismatch");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    return a + b.negated();
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(j, c) != 0) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& k)
{
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, j) != 0) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack: row counts differ");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack: column counts differ");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a)
{
    std::ostringstream os;
    os << a;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a)
{
    os << '[';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << ']';
    }
    return os << "] (" << a.rows() << 'x' << a.cols() << ')';
}

} // namespace cwcoh
