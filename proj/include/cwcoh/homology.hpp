#ifndef CWCOH_HOMOLOGY_HPP
#define CWCOH_HOMOLOGY_HPP

#include "cwcoh/ab_group.hpp"
#include "cwcoh/ab_hom.hpp"
#include "cwcoh/complex.hpp"
#include "cwcoh/quotient.hpp"

#include <cstddef>
#include <map>
#include <span>

namespace cwcoh {

enum class Variant { homology, cohomology };

/**
 * A (co)homology group together with the presentation it was computed from.
 *
 * The ambient space is (Z^cells)^blocks: one copy of the (co)chains per
 * cyclic factor of the coefficient group, block i read modulo
 * block_moduli()[i] (0 for Z). Lifts are genuine (co)cycles.
 */
class GroupWithPresentation
{
public:
    GroupWithPresentation(QuotientGroup quotient, std::size_t cells, IntVector block_moduli);

    const FgAbGroup& group() const { return quotient_.group(); }
    std::size_t ambient_dim() const { return quotient_.ambient_dim(); }
    std::size_t cells() const { return cells_; }
    const IntVector& block_moduli() const { return block_moduli_; }
    const IntMatrix& lifts() const { return quotient_.lifts(); }

    /// Canonical coordinates of the class of a (co)cycle; throws NotInLattice.
    IntVector coordinates(std::span<const Integer> cycle) const { return quotient_.coordinates(cycle); }
    bool is_cycle(std::span<const Integer> v) const { return quotient_.contains(v); }

private:
    QuotientGroup quotient_;
    std::size_t cells_;
    IntVector block_moduli_;
};

/// H_n(x; coefficients) or H^n(x; coefficients); trivial outside [0, dim].
GroupWithPresentation compute_group(const CwComplex& x, int n, const FgAbGroup& coefficients, Variant variant,
                                    bool reduced);

GroupWithPresentation integral_homology(const CwComplex& x, int n, bool reduced = false);

/// Dualize, then take kernel-image quotients, one cyclic factor of G at a time.
GroupWithPresentation cohomology(const CwComplex& x, int n, const FgAbGroup& coefficients, bool reduced = false);

/// Groups for -1 <= n <= dim + 1.
std::map<int, FgAbGroup> all_groups(const CwComplex& x, const FgAbGroup& coefficients, Variant variant,
                                    bool reduced);

/// hom(Z[cells], G) with no differentials: G^cells on per-cell cochains.
GroupWithPresentation cochain_module(std::size_t cells, const FgAbGroup& coefficients);

/**
 * The homomorphism induced by a (co)chain-level integer matrix, applied to
 * each coefficient block: chain_level maps source cells to target cells.
 * Throws NotInLattice if the image of a lift is not a (co)cycle.
 */
AbHom induced_hom(const GroupWithPresentation& source, const GroupWithPresentation& target,
                  const IntMatrix& chain_level);

/// Alternating sum of the ranks of H_n(x; Z).
long betti_euler_characteristic(const CwComplex& x);

} // namespace cwcoh

#endif
