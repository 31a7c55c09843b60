#include "cwcoh/quotient.hpp"

#include "cwcoh/errors.hpp"

#include <vector>

namespace cwcoh {

IntVector QuotientGroup::coordinates(std::span<const Integer> v) const
{
    if (v.size() != ambient_dim_) throw ShapeMismatch("coordinates: vector has wrong length");
    auto c = solver_->solve(v);
    if (!c) throw NotInLattice("vector is not in the numerator lattice");
    IntVector y = readout_.apply(*c);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = reduce_mod(y[i], orders_[i]);
    return y;
}

bool QuotientGroup::contains(std::span<const Integer> v) const
{
    return solver_->solve(v).has_value();
}

QuotientGroup quotient_group(std::size_t ambient_dim, const IntMatrix& numerator, const IntMatrix& denominator)
{
    if (numerator.rows() != ambient_dim || denominator.rows() != ambient_dim)
        throw ShapeMismatch("quotient_group: generators must live in Z^" + std::to_string(ambient_dim));

    QuotientGroup q;
    q.ambient_dim_ = ambient_dim;
    q.numerator_ = lattice_basis(numerator);
    q.solver_ = std::make_shared<const IntegerSolver>(q.numerator_);
    const std::size_t r = q.numerator_.cols();

    IntMatrix relations(r, denominator.cols());
    for (std::size_t j = 0; j < denominator.cols(); ++j) {
        auto c = q.solver_->solve(denominator.column(j));
        if (!c)
            throw ContainmentViolation("quotient_group: denominator column " + std::to_string(j) +
                                       " is not in the numerator lattice");
        relations.set_column(j, *c);
    }

    // Lambda / D  ~  Z^r / im(relations)  ~  Z^r / im(S)  via y = U^-1 c.
    const SnfResult d = snf(relations);
    std::vector<std::size_t> free_idx, torsion_idx;
    IntVector torsion_orders;
    for (std::size_t i = 0; i < r; ++i) {
        const Integer s = (i < d.S.cols()) ? d.S(i, i) : Integer(0);
        if (s == 0)
            free_idx.push_back(i);
        else if (s != 1) {
            torsion_idx.push_back(i);
            torsion_orders.push_back(s);
        }
    }

    std::vector<std::size_t> gens = free_idx;
    gens.insert(gens.end(), torsion_idx.begin(), torsion_idx.end());
    q.group_ = normalize_diagonal(torsion_orders, free_idx.size());
    q.orders_ = q.group_.generator_orders();

    q.lifts_ = IntMatrix(ambient_dim, gens.size());
    q.readout_ = IntMatrix(gens.size(), r);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        q.lifts_.set_column(g, q.numerator_.apply(d.U.column(gens[g])));
        for (std::size_t k = 0; k < r; ++k) q.readout_(g, k) = d.U_inverse(gens[g], k);
    }
    return q;
}

QuotientGroup subquotient(const IntMatrix& out_map, const IntMatrix& in_map, const FgAbGroup& coefficients)
{
    const std::size_t m = out_map.cols();
    if (in_map.rows() != m)
        throw ShapeMismatch("subquotient: maps are not composable (" + std::to_string(out_map.rows()) + "x" +
                            std::to_string(out_map.cols()) + " after " + std::to_string(in_map.rows()) + "x" +
                            std::to_string(in_map.cols()) + ")");
    const IntVector moduli = coefficients.generator_orders();
    const std::size_t k = out_map.rows();
    const std::size_t t = moduli.size();

    const IntMatrix composite = out_map * in_map;
    for (const auto& d : moduli)
        for (const auto& x : composite.entries())
            if (reduce_mod(x, d) != 0)
                throw ChainConditionViolation("subquotient: outgoing map after incoming map is nonzero mod " +
                                              d.str());

    std::vector<IntMatrix> outs(t, out_map), ins(t, in_map);
    IntVector row_moduli, ambient_moduli;
    for (const auto& d : moduli) {
        row_moduli.insert(row_moduli.end(), k, d);
        ambient_moduli.insert(ambient_moduli.end(), m, d);
    }

    // Lambda = { x : out x = 0 mod d, blockwise } is the projection of ker [out | diag(d)].
    const IntMatrix lifted = hstack(block_diagonal(outs), IntMatrix::diagonal(row_moduli));
    const IntMatrix kernel = kernel_basis(lifted);
    const IntMatrix numerator = kernel.submatrix(0, m * t, 0, kernel.cols());
    const IntMatrix denominator = hstack(block_diagonal(ins), IntMatrix::diagonal(ambient_moduli));
    return quotient_group(m * t, numerator, denominator);
}

QuotientGroup mod_d_quotient(const IntMatrix& out_map, const IntMatrix& in_map, const Integer& d)
{
    if (d < 2) throw std::invalid_argument("mod_d_quotient: modulus must be at least 2");
    return subquotient(out_map, in_map, FgAbGroup::cyclic(d));
}

} // namespace cwcoh
