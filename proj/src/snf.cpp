// Smith normal form and the lattice routines built on it.

#include "cwcoh/errors.hpp"
#include "cwcoh/int_matrix.hpp"

#include <algorithm>
#include <optional>

namespace cwcoh {

namespace {

/// Running decomposition: work = P * A * Q with U = P^-1, V = Q^-1.
struct SnfWork
{
    IntMatrix work;
    IntMatrix U, U_inverse, V, V_inverse;

    explicit SnfWork(const IntMatrix& a)
        : work(a),
          U(IntMatrix::identity(a.rows())),
          U_inverse(IntMatrix::identity(a.rows())),
          V(IntMatrix::identity(a.cols())),
          V_inverse(IntMatrix::identity(a.cols()))
    {
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        work.swap_rows(i, j);
        U_inverse.swap_rows(i, j);
        U.swap_cols(i, j);
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        work.swap_cols(i, j);
        V_inverse.swap_cols(i, j);
        V.swap_rows(i, j);
    }

    // row_i += k * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& k)
    {
        if (k == 0) return;
        work.add_row_multiple(i, j, k);
        U_inverse.add_row_multiple(i, j, k);
        U.add_col_multiple(j, i, -k);
    }

    // col_i += k * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& k)
    {
        if (k == 0) return;
        work.add_col_multiple(i, j, k);
        V_inverse.add_col_multiple(i, j, k);
        V.add_row_multiple(j, i, -k);
    }

    void negate_row(std::size_t i)
    {
        work.negate_row(i);
        U_inverse.negate_row(i);
        U.negate_col(i);
    }
};

/// Nonzero entry of least absolute value in the block [t.., t..];
/// ties go to the lowest row, then the lowest column.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& m, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& x = m(i, j);
            if (x == 0) continue;
            Integer ax = abs_value(x);
            if (!best || ax < best_abs) {
                best = {i, j};
                best_abs = std::move(ax);
                if (best_abs == 1) return best;
            }
        }
    return best;
}

} // namespace

std::size_t SnfResult::rank() const
{
    std::size_t r = 0;
    const std::size_t n = std::min(S.rows(), S.cols());
    while (r < n && S(r, r) != 0) ++r;
    return r;
}

IntVector SnfResult::diagonal() const
{
    IntVector d;
    const std::size_t n = std::min(S.rows(), S.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
    return d;
}

SnfResult snf(const IntMatrix& a)
{
    SnfWork w(a);
    IntMatrix& m = w.work;
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        const auto first = min_pivot(m, t);
        if (!first) break;
        const auto [pi, pj] = *first;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (m(i, t) == 0) continue;
                Integer q = m(i, t) / m(t, t);
                w.add_row(i, t, -q);
                if (m(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (m(t, j) == 0) continue;
                Integer q = m(t, j) / m(t, t);
                w.add_col(j, t, -q);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived: re-pivot on it.
                const auto [ri, rj] = min_pivot(m, t).value();
                w.swap_rows(t, ri);
                w.swap_cols(t, rj);
                continue;
            }

            // Divisibility repair: fold an offending row into the pivot row.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            w.add_row(t, *bad_row, 1);
        }
        if (m(t, t) < 0) w.negate_row(t);
    }

    return SnfResult{std::move(w.U), std::move(w.work), std::move(w.V), std::move(w.U_inverse),
                     std::move(w.V_inverse)};
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    const SnfResult d = snf(a);
    const std::size_t r = d.rank();
    // a x = 0  <=>  S (V x) = 0  <=>  (V x)_i = 0 for i < rank.
    return d.V_inverse.submatrix(0, a.cols(), r, a.cols() - r);
}

IntMatrix lattice_basis(const IntMatrix& a)
{
    const SnfResult d = snf(a);
    const std::size_t r = d.rank();
    IntMatrix basis(a.rows(), r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) basis(i, j) = d.U(i, j) * d.S(j, j);
    return basis;
}

IntegerSolver::IntegerSolver(IntMatrix a) : a_(std::move(a)), snf_(snf(a_)), rank_(snf_.rank()) {}

std::optional<IntVector> IntegerSolver::solve(std::span<const Integer> v) const
{
    if (v.size() != a_.rows()) throw ShapeMismatch("solve: right-hand side has wrong length");
    const IntVector w = snf_.U_inverse.apply(v);
    IntVector y(a_.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < rank_) {
            if (w[i] % snf_.S(i, i) != 0) return std::nullopt;
            y[i] = w[i] / snf_.S(i, i);
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.V_inverse.apply(y);
}

IntVector lattice_coordinates(const IntMatrix& basis, std::span<const Integer> v)
{
    IntegerSolver solver(basis);
    if (solver.rank() != basis.cols())
        throw ShapeMismatch("lattice_coordinates: basis columns are linearly dependent");
    auto c = solver.solve(v);
    if (!c) throw NotInLattice("vector is not in the lattice spanned by the basis");
    return *c;
}

bool lattice_contains(const IntMatrix& basis, std::span<const Integer> v)
{
    return IntegerSolver(basis).solve(v).has_value();
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows()) throw ShapeMismatch("same_lattice: ambient dimensions differ");
    const IntegerSolver sa(a), sb(b);
    if (sa.rank() != sb.rank()) return false;
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!sa.solve(b.column(j))) return false;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!sb.solve(a.column(j))) return false;
    return true;
}

} // namespace cwcoh
