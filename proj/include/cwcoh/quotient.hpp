#ifndef CWCOH_QUOTIENT_HPP
#define CWCOH_QUOTIENT_HPP

#include "cwcoh/ab_group.hpp"
#include "cwcoh/int_matrix.hpp"

#include <cstddef>
#include <memory>
#include <span>

namespace cwcoh {

/**
 * A subquotient Lambda / D of Z^ambient in canonical form, with an explicit
 * lift in Z^ambient for every canonical generator and a coordinate map
 * Lambda -> Z^gens (free coordinates exact, torsion coordinates reduced).
 *
 * AbHom matrices between computed groups are written against these
 * generators.
 */
class QuotientGroup
{
public:
    const FgAbGroup& group() const { return group_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    /// ambient_dim x generator_count; column i lifts canonical generator i.
    const IntMatrix& lifts() const { return lifts_; }
    /// Basis of the numerator lattice.
    const IntMatrix& numerator_basis() const { return numerator_; }

    /// Canonical coordinates of a vector of the numerator lattice; throws NotInLattice.
    IntVector coordinates(std::span<const Integer> v) const;
    bool contains(std::span<const Integer> v) const;

private:
    friend QuotientGroup quotient_group(std::size_t, const IntMatrix&, const IntMatrix&);

    FgAbGroup group_;
    std::size_t ambient_dim_ = 0;
    IntMatrix numerator_;
    IntMatrix lifts_;
    IntVector orders_;
    // Rows of U^-1 that read off canonical coordinates from numerator coordinates.
    IntMatrix readout_;
    std::shared_ptr<const IntegerSolver> solver_;
};

/**
 * Lambda / span(denominator), Lambda the span of the numerator columns.
 * Throws ContainmentViolation if a denominator column lies outside Lambda.
 */
QuotientGroup quotient_group(std::size_t ambient_dim, const IntMatrix& numerator, const IntMatrix& denominator);

/**
 * ker(out mod d) / im(in mod d) inside (Z/d)^m, with m = out.cols() = in.rows().
 * Throws ChainConditionViolation unless out * in = 0 mod d.
 */
QuotientGroup mod_d_quotient(const IntMatrix& out_map, const IntMatrix& in_map, const Integer& d);

/**
 * Kernel-image quotient at the middle of  Z^l --in--> Z^m --out--> Z^k,
 * tensored with the coefficient group: one block of Z^m per cyclic factor of
 * `coefficients`, each block read modulo that factor's order (0 = Z).
 * The ambient space is the concatenation of the blocks.
 */
QuotientGroup subquotient(const IntMatrix& out_map, const IntMatrix& in_map, const FgAbGroup& coefficients);

} // namespace cwcoh

#endif
