// Brute-force reference computations for the tests. Nothing here touches the
// Smith normal form code: everything is enumeration, minors or Cramer's rule.
#ifndef CWCOH_TESTS_ORACLES_HPP
#define CWCOH_TESTS_ORACLES_HPP

#include "cwcoh/ab_group.hpp"
#include "cwcoh/complex.hpp"
#include "cwcoh/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using cwcoh::FgAbGroup;
using cwcoh::IntMatrix;
using cwcoh::Integer;
using cwcoh::IntVector;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    std::uniform_int_distribution<long> entry(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

/// Determinant by cofactor expansion (tiny matrices only).
inline Integer cofactor_det(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        const Integer minor = cofactor_det(a.without_row(0).without_column(j));
        total += (j % 2 == 0 ? 1 : -1) * a(0, j) * minor;
    }
    return total;
}

/// d_k = gcd of all k x k minors, k = 1..min(rows, cols).
inline IntVector determinantal_divisors(const IntMatrix& a)
{
    IntVector d;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(a.rows(), k))
            for (const auto& cs : subsets(a.cols(), k)) {
                IntMatrix m(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
                g = cwcoh::gcd_of(g, cofactor_det(m));
            }
        d.push_back(g);
    }
    return d;
}

/// Invariant factors from determinantal divisors: s_k = d_k / d_(k-1).
inline IntVector invariant_factors(const IntMatrix& a)
{
    IntVector s;
    Integer prev = 1;
    for (const Integer& d : determinantal_divisors(a)) {
        if (d == 0) {
            s.push_back(0);
            prev = 0;
            continue;
        }
        s.push_back(d / prev);
        prev = d;
    }
    return s;
}

/// |{x in G : k x = 0}| for a finite group in canonical form.
inline Integer torsion_count(const FgAbGroup& g, const Integer& k)
{
    Integer c = 1;
    for (const Integer& d : g.torsion()) c *= cwcoh::gcd_of(d, k);
    return c;
}

/// A finite abelian group is determined by k -> |G[k]|; compare on all k | |G|.
inline bool same_torsion_profile(const FgAbGroup& g, const std::map<long, long>& counts)
{
    if (!g.is_finite() || counts.empty() || g.order() != counts.rbegin()->first) return false;
    for (const auto& [k, c] : counts)
        if (torsion_count(g, k) != c) return false;
    return true;
}

/// Finite abelian group given by its elements in a product of cyclic groups
/// Z/m_1 x ... x Z/m_r (all m_i >= 2). Elements are residue vectors.
struct FiniteModule
{
    std::vector<long> moduli;

    std::vector<std::vector<long>> elements() const
    {
        std::vector<std::vector<long>> out{{}};
        for (long m : moduli) {
            std::vector<std::vector<long>> next;
            for (const auto& e : out)
                for (long r = 0; r < m; ++r) {
                    auto f = e;
                    f.push_back(r);
                    next.push_back(std::move(f));
                }
            out = std::move(next);
        }
        return out;
    }

    std::vector<long> scale(const std::vector<long>& x, long k) const
    {
        std::vector<long> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = ((x[i] * k) % moduli[i] + moduli[i]) % moduli[i];
        return y;
    }
};

/// Divisors of n (n >= 1).
inline std::vector<long> divisors(long n)
{
    std::vector<long> d;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

/// k -> |S[k]| for a subquotient Z/B of a finite module, Z and B given as
/// element sets with B inside Z.
inline std::map<long, long> subquotient_profile(const FiniteModule& mod, const std::set<std::vector<long>>& cycles,
                                                const std::set<std::vector<long>>& boundaries)
{
    const long order = static_cast<long>(cycles.size() / boundaries.size());
    std::map<long, long> counts;
    for (long k : divisors(order)) {
        long hits = 0;
        for (const auto& z : cycles)
            if (boundaries.count(mod.scale(z, k))) ++hits;
        counts[k] = hits / static_cast<long>(boundaries.size());
    }
    return counts;
}

/// Adjugate by cofactors, so that a * adj(a) = det(a) * I.
inline IntMatrix adjugate(const IntMatrix& a)
{
    const std::size_t n = a.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj(j, i) = ((i + j) % 2 == 0 ? 1 : -1) * cofactor_det(a.without_row(i).without_column(j));
    return adj;
}

/**
 * k -> |G[k]| for G = Z^n / R Z^n with R square and nonsingular, by
 * enumerating the box [0, D)^n, D = |det R|, which surjects onto G with
 * fibres of equal size. Membership of v in R Z^n is adj(R) v = 0 mod det.
 */
inline std::map<long, long> lattice_quotient_profile(const IntMatrix& r)
{
    const std::size_t n = r.rows();
    const Integer det = cofactor_det(r);
    const long d = static_cast<long>(cwcoh::abs_value(det));
    const IntMatrix adj = adjugate(r);
    auto member = [&](const std::vector<long>& v) {
        for (std::size_t i = 0; i < n; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < n; ++j) s += adj(i, j) * v[j];
            if (s % det != 0) return false;
        }
        return true;
    };
    const FiniteModule box{std::vector<long>(n, d)};
    const auto points = box.elements();
    long zero_class = 0;
    for (const auto& x : points)
        if (member(x)) ++zero_class;
    const long order = static_cast<long>(points.size()) / zero_class;
    std::map<long, long> counts;
    for (long k : divisors(order)) {
        long hits = 0;
        for (const auto& x : points) {
            std::vector<long> kx(x);
            for (auto& e : kx) e *= k;
            if (member(kx)) ++hits;
        }
        counts[k] = hits / zero_class;
    }
    return counts;
}

/**
 * Cohomology H^n(x; Z/m_1 + ... + Z/m_r) by enumerating every cochain.
 * Returns k -> |H[k]| for all k dividing |H| (so counts[1] == 1 and the
 * largest key is the order).
 */
inline std::map<long, long> brute_cohomology(const cwcoh::CwComplex& x, int n, const std::vector<long>& moduli,
                                             bool reduced)
{
    // A cochain on cells of dimension k with coefficients in a product of
    // cyclic groups: block b holds c_k residues mod moduli[b].
    auto module = [&](std::size_t cells) {
        FiniteModule mod;
        for (long m : moduli)
            for (std::size_t i = 0; i < cells; ++i) mod.moduli.push_back(m);
        return mod;
    };
    // coboundary C^k -> C^(k+1) is the transpose of the boundary, blockwise.
    auto coboundary = [&](int k, const std::vector<long>& phi) {
        const std::size_t ck = x.cells(k), ck1 = x.cells(k + 1);
        const IntMatrix b = x.boundary(k + 1);
        std::vector<long> out(moduli.size() * ck1, 0);
        for (std::size_t blk = 0; blk < moduli.size(); ++blk)
            for (std::size_t j = 0; j < ck1; ++j) {
                long s = 0;
                for (std::size_t i = 0; i < ck; ++i) s += static_cast<long>(b(i, j)) * phi[blk * ck + i];
                out[blk * ck1 + j] = ((s % moduli[blk]) + moduli[blk]) % moduli[blk];
            }
        return out;
    };

    const std::size_t cn = x.cells(n);
    const FiniteModule here = module(cn);
    std::set<std::vector<long>> cycles, boundaries;
    for (const auto& phi : here.elements()) {
        const auto d = coboundary(n, phi);
        if (std::all_of(d.begin(), d.end(), [](long v) { return v == 0; })) cycles.insert(phi);
    }
    if (n >= 1) {
        for (const auto& psi : module(x.cells(n - 1)).elements()) boundaries.insert(coboundary(n - 1, psi));
    } else {
        boundaries.insert(std::vector<long>(moduli.size() * cn, 0));
        if (reduced) {
            // Divide out the constant cochains.
            for (const auto& c : FiniteModule{moduli}.elements()) {
                std::vector<long> phi;
                for (std::size_t blk = 0; blk < moduli.size(); ++blk)
                    for (std::size_t i = 0; i < cn; ++i) phi.push_back(c[blk]);
                boundaries.insert(phi);
            }
        }
    }
    return subquotient_profile(here, cycles, boundaries);
}

} // namespace oracle

#endif
