#ifndef CWCOH_AB_HOM_HPP
#define CWCOH_AB_HOM_HPP

#include "cwcoh/ab_group.hpp"
#include "cwcoh/int_matrix.hpp"
#include "cwcoh/quotient.hpp"

#include <iosfwd>

namespace cwcoh {

/**
 * Homomorphism between two canonical groups, written on canonical
 * generators: column j is the image of source generator j. Entries are kept
 * reduced modulo the order of the corresponding target generator.
 */
class AbHom
{
public:
    /// Throws ShapeMismatch on bad shapes and std::invalid_argument if the
    /// matrix does not respect the source relations.
    AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static AbHom identity(const FgAbGroup& g);
    static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    IntVector apply(std::span<const Integer> x) const;

    friend bool operator==(const AbHom&, const AbHom&) = default;

private:
    FgAbGroup source_;
    FgAbGroup target_;
    IntMatrix matrix_;
};

/// g after f; throws ShapeMismatch unless f.target() == g.source().
AbHom compose(const AbHom& g, const AbHom& f);

/// Columns span the relation lattice diag(orders) of g's canonical presentation.
IntMatrix relation_lattice(const FgAbGroup& g);
/// Lift of ker h to Z^(source generators); contains the source relations.
IntMatrix kernel_lattice(const AbHom& h);
/// Lift of im h to Z^(target generators); contains the target relations.
IntMatrix image_lattice(const AbHom& h);

FgAbGroup hom_kernel(const AbHom& h);
FgAbGroup hom_image(const AbHom& h);
FgAbGroup hom_cokernel(const AbHom& h);

/// im g == ker h as subgroups of the middle group. Throws ShapeMismatch
/// unless g.target() == h.source().
bool is_exact_pair(const AbHom& g, const AbHom& h);

/// ker h / im g at the middle of a composable pair with h after g equal to zero.
QuotientGroup middle_homology(const AbHom& g, const AbHom& h);

bool is_injective(const AbHom& h);
bool is_surjective(const AbHom& h);

/// Two-sided inverse; throws NotAnIsomorphism.
AbHom invert_iso(const AbHom& h);

std::ostream& operator<<(std::ostream& os, const AbHom& h);

} // namespace cwcoh

#endif
