#include "cwcoh/homology.hpp"

#include "cwcoh/errors.hpp"

namespace cwcoh {

GroupWithPresentation::GroupWithPresentation(QuotientGroup quotient, std::size_t cells, IntVector block_moduli)
    : quotient_(std::move(quotient)), cells_(cells), block_moduli_(std::move(block_moduli))
{
}

namespace {

IntMatrix ones(std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = 1;
    return m;
}

} // namespace

GroupWithPresentation compute_group(const CwComplex& x, int n, const FgAbGroup& coefficients, Variant variant,
                                    bool reduced)
{
    require_valid(x);
    const IntVector moduli = coefficients.generator_orders();
    if (n < 0 || static_cast<std::size_t>(n) > x.dim())
        return GroupWithPresentation(subquotient(IntMatrix(0, 0), IntMatrix(0, 0), coefficients), 0, moduli);

    const std::size_t cells = x.cells(n);
    IntMatrix out, in;
    if (variant == Variant::homology) {
        // The augmented complex ends in  Z[A_1] -> Z[A_0] -> Z, the last map summing coefficients.
        out = n == 0 ? (reduced ? ones(1, cells) : IntMatrix(0, cells)) : x.boundary(n);
        in = x.boundary(n + 1);
    } else {
        // Dual augmentation: constant cochains are divided out at dimension 0.
        out = x.boundary(n + 1).transpose();
        in = n == 0 ? (reduced ? ones(cells, 1) : IntMatrix(cells, 0)) : x.boundary(n).transpose();
    }
    return GroupWithPresentation(subquotient(out, in, coefficients), cells, moduli);
}

GroupWithPresentation integral_homology(const CwComplex& x, int n, bool reduced)
{
    return compute_group(x, n, FgAbGroup::free(1), Variant::homology, reduced);
}

GroupWithPresentation cohomology(const CwComplex& x, int n, const FgAbGroup& coefficients, bool reduced)
{
    return compute_group(x, n, coefficients, Variant::cohomology, reduced);
}

std::map<int, FgAbGroup> all_groups(const CwComplex& x, const FgAbGroup& coefficients, Variant variant,
                                    bool reduced)
{
    std::map<int, FgAbGroup> table;
    for (int n = -1; n <= static_cast<int>(x.dim()) + 1; ++n)
        table[n] = compute_group(x, n, coefficients, variant, reduced).group();
    return table;
}

GroupWithPresentation cochain_module(std::size_t cells, const FgAbGroup& coefficients)
{
    return GroupWithPresentation(subquotient(IntMatrix(0, cells), IntMatrix(cells, 0), coefficients), cells,
                                 coefficients.generator_orders());
}

AbHom induced_hom(const GroupWithPresentation& source, const GroupWithPresentation& target,
                  const IntMatrix& chain_level)
{
    const std::size_t blocks = source.block_moduli().size();
    if (source.block_moduli() != target.block_moduli())
        throw ShapeMismatch("induced_hom: coefficient blocks differ");
    // A trivial group computed outside the range of a complex has an empty ambient space.
    if (source.group().is_trivial() || target.group().is_trivial())
        return AbHom::zero(source.group(), target.group());
    if (chain_level.rows() != target.cells() || chain_level.cols() != source.cells())
        throw ShapeMismatch("induced_hom: chain-level matrix is " + std::to_string(chain_level.rows()) + "x" +
                            std::to_string(chain_level.cols()) + ", expected " + std::to_string(target.cells()) +
                            "x" + std::to_string(source.cells()));

    const std::size_t ms = source.cells(), mt = target.cells();
    const IntMatrix& lifts = source.lifts();
    IntMatrix m(target.group().generator_count(), source.group().generator_count());
    for (std::size_t g = 0; g < lifts.cols(); ++g) {
        const IntVector lift = lifts.column(g);
        IntVector image(mt * blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            const IntVector part = chain_level.apply(std::span<const Integer>(lift).subspan(b * ms, ms));
            std::copy(part.begin(), part.end(), image.begin() + static_cast<long>(b * mt));
        }
        m.set_column(g, target.coordinates(image));
    }
    return AbHom(source.group(), target.group(), std::move(m));
}

long betti_euler_characteristic(const CwComplex& x)
{
    long chi = 0;
    for (std::size_t n = 0; n <= x.dim(); ++n) {
        const long r = static_cast<long>(integral_homology(x, static_cast<int>(n)).group().rank());
        chi += n % 2 == 0 ? r : -r;
    }
    return chi;
}

} // namespace cwcoh
