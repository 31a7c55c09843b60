#include "cwcoh/chain_map.hpp"

#include "cwcoh/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cwcoh {

namespace {

/// Cell count of the reduced complex (basepoint deleted in dimension 0).
std::size_t reduced_cells(const CwComplex& x, int n)
{
    if (n < 0) return 0;
    return n == 0 ? x.cells(0) - 1 : x.cells(n);
}

/// Boundary of the reduced complex, shape reduced_cells(n-1) x reduced_cells(n).
IntMatrix reduced_boundary(const CwComplex& x, int n)
{
    if (n <= 0) return IntMatrix(0, reduced_cells(x, n));
    if (n == 1) return x.boundary(1).without_row(x.basepoint());
    return x.boundary(n);
}

/// f on reduced chains, landing in the unreduced target chains.
IntMatrix reduced_component(const ChainMap& f, int n)
{
    if (n < 0) return IntMatrix(f.target().cells(n), 0);
    if (n == 0) return f.component(0) * reduced_inclusion(f.source());
    return f.component(n);
}

std::size_t top_of(const CwComplex& a, const CwComplex& b)
{
    return std::max(a.dim(), b.dim());
}

} // namespace

ChainMap::ChainMap(CwComplex source, CwComplex target, std::vector<IntMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps))
{
    const std::size_t top = top_of(source_, target_);
    if (maps_.size() != top + 1)
        throw ShapeMismatch("ChainMap: expected " + std::to_string(top + 1) + " components, got " +
                            std::to_string(maps_.size()));
    for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(n);
        if (maps_[n].rows() != target_.cells(k) || maps_[n].cols() != source_.cells(k))
            throw ShapeMismatch("ChainMap: component " + std::to_string(n) + " is " +
                                std::to_string(maps_[n].rows()) + "x" + std::to_string(maps_[n].cols()) +
                                ", expected " + std::to_string(target_.cells(k)) + "x" +
                                std::to_string(source_.cells(k)));
    }
}

IntMatrix ChainMap::component(int n) const
{
    if (n >= 0 && static_cast<std::size_t>(n) < maps_.size()) return maps_[static_cast<std::size_t>(n)];
    return IntMatrix(target_.cells(n), source_.cells(n));
}

bool ChainMap::is_pointed() const
{
    const IntMatrix& f0 = maps_[0];
    if (source_.basepoint() >= f0.cols() || target_.basepoint() >= f0.rows()) return false;
    for (std::size_t i = 0; i < f0.rows(); ++i)
        if (f0(i, source_.basepoint()) != (i == target_.basepoint() ? 1 : 0)) return false;
    return true;
}

ValidationReport validate_map(const ChainMap& f, bool require_pointed)
{
    ValidationReport report;
    for (const auto* x : {&f.source(), &f.target()})
        for (auto v : validate(*x).violations) {
            v.detail = x->name() + ": " + v.detail;
            report.violations.push_back(std::move(v));
        }
    if (!report.ok()) return report;

    const IntMatrix& f0 = f.maps()[0];
    for (std::size_t j = 0; j < f0.cols(); ++j) {
        Integer sum = 0;
        for (std::size_t i = 0; i < f0.rows(); ++i) sum += f0(i, j);
        if (sum != 1)
            report.violations.push_back(
                {0, "augmentation", "column " + std::to_string(j) + " of component 0 sums to " + sum.str()});
    }
    if (require_pointed && !f.is_pointed())
        report.violations.push_back({0, "basepoint", "the source basepoint is not sent to the target basepoint"});
    for (std::size_t n = 1; n <= f.top_dimension(); ++n) {
        const int k = static_cast<int>(n);
        if (!(f.target().boundary(k) * f.component(k) == f.component(k - 1) * f.source().boundary(k)))
            report.violations.push_back(
                {k, "chain", "target boundary after component " + std::to_string(n) +
                                 " differs from component " + std::to_string(n - 1) + " after source boundary"});
    }
    return report;
}

ChainMap identity_map(const CwComplex& x)
{
    std::vector<IntMatrix> maps;
    for (std::size_t n = 0; n <= x.dim(); ++n) maps.push_back(IntMatrix::identity(x.cell_counts()[n]));
    return ChainMap(x, x, std::move(maps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target() == g.source()))
        throw ShapeMismatch("compose: target of " + f.target().name() + " is not the source " + g.source().name());
    const std::size_t top = top_of(f.source(), g.target());
    std::vector<IntMatrix> maps;
    for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(n);
        maps.push_back(g.component(k) * f.component(k));
    }
    return ChainMap(f.source(), g.target(), std::move(maps));
}

ChainMap skeleton_inclusion(const CwComplex& x, std::size_t m)
{
    CwComplex sk = skeleton(x, m);
    std::vector<IntMatrix> maps;
    for (std::size_t n = 0; n <= x.dim(); ++n)
        maps.push_back(n <= m ? IntMatrix::identity(x.cell_counts()[n]) : IntMatrix(x.cell_counts()[n], 0));
    return ChainMap(std::move(sk), x, std::move(maps));
}

ChainMap sphere_self_map(std::size_t n, const Integer& d)
{
    const CwComplex s = zoo::sphere(n);
    if (n == 0) {
        if (d == 1) return identity_map(s);
        if (d == -1) return ChainMap(s, s, {IntMatrix{{0, 1}, {1, 0}}});
        if (d == 0) return s0_constant_map(s.basepoint());
        throw std::invalid_argument("sphere_self_map: S^0 has no self map of degree " + d.str());
    }
    std::vector<IntMatrix> maps;
    for (std::size_t k = 0; k <= n; ++k) maps.push_back(IntMatrix(s.cell_counts()[k], s.cell_counts()[k]));
    maps[0](0, 0) = 1;
    maps[n](0, 0) = d;
    return ChainMap(s, s, std::move(maps));
}

ChainMap s0_constant_map(std::size_t vertex)
{
    if (vertex > 1) throw std::invalid_argument("s0_constant_map: S^0 has two vertices");
    const CwComplex s = zoo::sphere(0);
    IntMatrix f0(2, 2);
    f0(vertex, 0) = f0(vertex, 1) = 1;
    return ChainMap(s, s, {f0});
}

IntMatrix reduced_inclusion(const CwComplex& x)
{
    const std::size_t c0 = x.cells(0);
    IntMatrix j(c0, c0 == 0 ? 0 : c0 - 1);
    for (std::size_t v = 0, col = 0; v < c0; ++v) {
        if (v == x.basepoint()) continue;
        j(v, col) = 1;
        j(x.basepoint(), col) = -1;
        ++col;
    }
    return j;
}

Integer degree(const ChainMap& f)
{
    if (!(f.source() == f.target())) throw NotASphereModel("degree: source and target differ");
    const CwComplex& x = f.source();
    std::optional<int> top;
    for (std::size_t n = 0; n <= x.dim(); ++n) {
        const FgAbGroup h = integral_homology(x, static_cast<int>(n), true).group();
        if (h.is_trivial()) continue;
        if (top || !(h == FgAbGroup::free(1)))
            throw NotASphereModel(x.name() + ": reduced homology is not Z in a single dimension");
        top = static_cast<int>(n);
    }
    if (!top) throw NotASphereModel(x.name() + ": reduced homology vanishes");
    return induced_map(f, *top, FgAbGroup::free(1), Variant::homology, true).matrix()(0, 0);
}

ChainMap susp_map(const ChainMap& f)
{
    const CwComplex s = suspension(f.source());
    const CwComplex t = suspension(f.target());
    std::vector<IntMatrix> maps{IntMatrix::identity(1)};
    maps.push_back(reduced_component(f, 0).without_row(f.target().basepoint()));
    for (std::size_t n = 1; n <= f.top_dimension(); ++n) maps.push_back(f.component(static_cast<int>(n)));
    return ChainMap(s, t, std::move(maps));
}

MappingCone mapping_cone(const ChainMap& f)
{
    const CwComplex& x = f.source();
    const CwComplex& y = f.target();
    const std::size_t top = std::max(y.dim(), x.dim() + 1);

    std::vector<std::size_t> cells(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(n);
        cells[n] = y.cells(k) + reduced_cells(x, k - 1);
    }

    std::vector<IntMatrix> bounds;
    for (std::size_t n = 1; n <= top; ++n) {
        const int k = static_cast<int>(n);
        const IntMatrix upper = hstack(y.boundary(k), reduced_component(f, k - 1));
        const IntMatrix lower =
            hstack(IntMatrix(reduced_cells(x, k - 2), y.cells(k)), reduced_boundary(x, k - 1).negated());
        bounds.push_back(vstack(upper, lower));
    }
    CwComplex cone("cone(" + x.name() + "->" + y.name() + ")", cells, std::move(bounds), y.basepoint());

    std::vector<IntMatrix> incl, proj;
    for (std::size_t n = 0; n <= top; ++n) {
        const int k = static_cast<int>(n);
        incl.push_back(vstack(IntMatrix::identity(y.cells(k)), IntMatrix(reduced_cells(x, k - 1), y.cells(k))));
        proj.push_back(hstack(IntMatrix(reduced_cells(x, k - 1), y.cells(k)),
                              IntMatrix::identity(reduced_cells(x, k - 1))));
    }
    ChainMap inclusion(y, cone, std::move(incl));
    return MappingCone{std::move(cone), std::move(inclusion), std::move(proj)};
}

AbHom induced_map(const ChainMap& f, int n, const FgAbGroup& coefficients, Variant variant, bool reduced)
{
    if (variant == Variant::homology)
        return induced_hom(compute_group(f.source(), n, coefficients, variant, reduced),
                           compute_group(f.target(), n, coefficients, variant, reduced), f.component(n));
    return induced_hom(compute_group(f.target(), n, coefficients, variant, reduced),
                       compute_group(f.source(), n, coefficients, variant, reduced), f.component(n).transpose());
}

AbHom connecting_map(const ChainMap& f, int n, const FgAbGroup& coefficients)
{
    return connecting_map(f, mapping_cone(f), n, coefficients);
}

AbHom connecting_map(const ChainMap& f, const MappingCone& cone, int n, const FgAbGroup& coefficients)
{
    const GroupWithPresentation source = cohomology(f.source(), n, coefficients, true);
    const GroupWithPresentation target = cohomology(cone.cone, n + 1, coefficients, true);
    if (n < 0 || static_cast<std::size_t>(n + 1) >= cone.projection.size())
        return AbHom::zero(source.group(), target.group());
    // Cochains on the source, restricted to reduced chains, then pulled back along the projection.
    const IntMatrix shift =
        n == 0 ? reduced_inclusion(f.source()).transpose() : IntMatrix::identity(f.source().cells(n));
    return induced_hom(source, target, cone.projection[static_cast<std::size_t>(n + 1)].transpose() * shift);
}

} // namespace cwcoh
