#ifndef CWCOH_CHAIN_MAP_HPP
#define CWCOH_CHAIN_MAP_HPP

#include "cwcoh/ab_hom.hpp"
#include "cwcoh/complex.hpp"
#include "cwcoh/homology.hpp"

#include <cstddef>
#include <vector>

namespace cwcoh {

/**
 * Cellular chain map: component(n) has target.cells(n) rows and
 * source.cells(n) columns. Components exist for 0..max(dims); beyond
 * that they are empty.
 */
class ChainMap
{
public:
    /// Throws ShapeMismatch if a component has the wrong shape or count.
    ChainMap(CwComplex source, CwComplex target, std::vector<IntMatrix> maps);

    const CwComplex& source() const { return source_; }
    const CwComplex& target() const { return target_; }
    const std::vector<IntMatrix>& maps() const { return maps_; }
    IntMatrix component(int n) const;
    std::size_t top_dimension() const { return maps_.size() - 1; }

    bool is_pointed() const;

    friend bool operator==(const ChainMap&, const ChainMap&) = default;

private:
    CwComplex source_;
    CwComplex target_;
    std::vector<IntMatrix> maps_;
};

/// Chain condition, augmentation compatibility and, if asked, pointedness.
/// Violations in the source or target complex are reported too.
ValidationReport validate_map(const ChainMap& f, bool require_pointed = true);

ChainMap identity_map(const CwComplex& x);

/// g after f; throws ShapeMismatch unless f.target() == g.source().
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// The inclusion of the m-skeleton.
ChainMap skeleton_inclusion(const CwComplex& x, std::size_t m);

/**
 * Degree-d self map of the minimal sphere. For n = 0 only d in {1, -1, 0}
 * exist: identity, swap, and the constant map at the basepoint.
 */
ChainMap sphere_self_map(std::size_t n, const Integer& d);

/// The constant self map of S^0 with value `vertex`.
ChainMap s0_constant_map(std::size_t vertex);

/**
 * The embedding J of reduced 0-chains into Z[A_0]: the non-basepoint vertex v
 * goes to v - basepoint. Its image is the kernel of the augmentation.
 */
IntMatrix reduced_inclusion(const CwComplex& x);

/// The integer by which f acts on the one nonzero reduced homology group Z.
/// Throws NotASphereModel; throws ShapeMismatch if source != target.
Integer degree(const ChainMap& f);

/// The map between reduced suspensions.
ChainMap susp_map(const ChainMap& f);

struct MappingCone
{
    CwComplex cone;
    /// target -> cone
    ChainMap inclusion;
    /// projection[n]: cone chains in dimension n onto the shifted reduced
    /// source chains in dimension n - 1, i.e. the block [0 | I].
    std::vector<IntMatrix> projection;
};

/**
 * Algebraic mapping cone on the reduced source complex: in dimension n the
 * cells are target n-cells followed by reduced source (n-1)-cells, with
 * boundary [[B'_n, F_(n-1)], [0, -B_(n-1)]].
 */
MappingCone mapping_cone(const ChainMap& f);

/// Covariant for homology, contravariant for cohomology.
AbHom induced_map(const ChainMap& f, int n, const FgAbGroup& coefficients, Variant variant, bool reduced);

/**
 * Connecting map h^n(source) -> h^(n+1)(cone) of reduced cohomology: a
 * cocycle on the source, moved to the shifted copy inside the cone (relative
 * to the basepoint value in dimension 0). No sign beyond the one in the cone
 * boundary is introduced.
 */
AbHom connecting_map(const ChainMap& f, int n, const FgAbGroup& coefficients);
AbHom connecting_map(const ChainMap& f, const MappingCone& cone, int n, const FgAbGroup& coefficients);

} // namespace cwcoh

#endif
