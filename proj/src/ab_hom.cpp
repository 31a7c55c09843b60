#include "cwcoh/ab_hom.hpp"

#include "cwcoh/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace cwcoh {

namespace {

IntMatrix reduced(IntMatrix m, const IntVector& row_orders)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = reduce_mod(m(i, j), row_orders[i]);
    return m;
}

} // namespace

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target))
{
    if (matrix.rows() != target_.generator_count() || matrix.cols() != source_.generator_count())
        throw ShapeMismatch("AbHom: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " +
                            std::to_string(target_.generator_count()) + "x" +
                            std::to_string(source_.generator_count()));
    const IntVector src = source_.generator_orders();
    const IntVector tgt = target_.generator_orders();
    // d * column must vanish in the target whenever the source generator has order d.
    for (std::size_t j = 0; j < src.size(); ++j) {
        if (src[j] == 0) continue;
        for (std::size_t i = 0; i < tgt.size(); ++i) {
            const Integer x = matrix(i, j) * src[j];
            if (tgt[i] == 0 ? x != 0 : x % tgt[i] != 0)
                throw std::invalid_argument("AbHom: not well defined on source generator " + std::to_string(j));
        }
    }
    matrix_ = reduced(std::move(matrix), tgt);
}

AbHom AbHom::identity(const FgAbGroup& g)
{
    return AbHom(g, g, IntMatrix::identity(g.generator_count()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target)
{
    return AbHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

IntVector AbHom::apply(std::span<const Integer> x) const
{
    IntVector y = matrix_.apply(x);
    const IntVector orders = target_.generator_orders();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = reduce_mod(y[i], orders[i]);
    return y;
}

AbHom compose(const AbHom& g, const AbHom& f)
{
    if (!(f.target() == g.source()))
        throw ShapeMismatch("compose: " + format_group(f.target()) + " is not " + format_group(g.source()));
    return AbHom(f.source(), g.target(), g.matrix() * f.matrix());
}

IntMatrix relation_lattice(const FgAbGroup& g)
{
    return IntMatrix::diagonal(g.generator_orders());
}

IntMatrix kernel_lattice(const AbHom& h)
{
    const std::size_t ks = h.source().generator_count();
    // x is in the lifted kernel iff M x + R_t y = 0 for some y.
    const IntMatrix k = kernel_basis(hstack(h.matrix(), relation_lattice(h.target())));
    return lattice_basis(hstack(k.submatrix(0, ks, 0, k.cols()), relation_lattice(h.source())));
}

IntMatrix image_lattice(const AbHom& h)
{
    return lattice_basis(hstack(h.matrix(), relation_lattice(h.target())));
}

FgAbGroup hom_kernel(const AbHom& h)
{
    return quotient_group(h.source().generator_count(), kernel_lattice(h), relation_lattice(h.source())).group();
}

FgAbGroup hom_image(const AbHom& h)
{
    return quotient_group(h.target().generator_count(), image_lattice(h), relation_lattice(h.target())).group();
}

FgAbGroup hom_cokernel(const AbHom& h)
{
    const std::size_t kt = h.target().generator_count();
    return quotient_group(kt, IntMatrix::identity(kt), image_lattice(h)).group();
}

bool is_exact_pair(const AbHom& g, const AbHom& h)
{
    if (!(g.target() == h.source()))
        throw ShapeMismatch("is_exact_pair: " + format_group(g.target()) + " is not " + format_group(h.source()));
    return same_lattice(image_lattice(g), kernel_lattice(h));
}

QuotientGroup middle_homology(const AbHom& g, const AbHom& h)
{
    if (!(g.target() == h.source()))
        throw ShapeMismatch("middle_homology: " + format_group(g.target()) + " is not " +
                            format_group(h.source()));
    return quotient_group(h.source().generator_count(), kernel_lattice(h), image_lattice(g));
}

bool is_injective(const AbHom& h)
{
    return same_lattice(kernel_lattice(h), relation_lattice(h.source()));
}

bool is_surjective(const AbHom& h)
{
    return same_lattice(image_lattice(h), IntMatrix::identity(h.target().generator_count()));
}

AbHom invert_iso(const AbHom& h)
{
    if (!is_injective(h)) throw NotAnIsomorphism("invert_iso: kernel is " + format_group(hom_kernel(h)));
    if (!is_surjective(h)) throw NotAnIsomorphism("invert_iso: cokernel is " + format_group(hom_cokernel(h)));
    const std::size_t ks = h.source().generator_count();
    const std::size_t kt = h.target().generator_count();
    const IntegerSolver solver(hstack(h.matrix(), relation_lattice(h.target())));
    IntMatrix inverse(ks, kt);
    for (std::size_t j = 0; j < kt; ++j) {
        IntVector e(kt);
        e[j] = 1;
        const auto x = solver.solve(e);
        if (!x) throw NotAnIsomorphism("invert_iso: generator " + std::to_string(j) + " has no preimage");
        for (std::size_t i = 0; i < ks; ++i) inverse(i, j) = (*x)[i];
    }
    return AbHom(h.target(), h.source(), std::move(inverse));
}

std::ostream& operator<<(std::ostream& os, const AbHom& h)
{
    return os << format_group(h.source()) << " -> " << format_group(h.target()) << ' ' << h.matrix();
}

} // namespace cwcoh
