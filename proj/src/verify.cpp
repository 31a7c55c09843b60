#include "cwcoh/verify.hpp"

#include "cwcoh/errors.hpp"

#include <sstream>

namespace cwcoh {

namespace {

std::string range_text(DimRange r)
{
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

CheckReport start(std::string check, std::string subject, const FgAbGroup& g, DimRange range)
{
    CheckReport r;
    r.check = std::move(check);
    r.subject = std::move(subject);
    r.coefficients = g;
    r.range = range;
    return r;
}

std::string map_subject(const ChainMap& f)
{
    return f.source().name() + "->" + f.target().name();
}

/// X_k / X_(k-1), with X_0 at k = 0.
CwComplex filtration_quotient(const CwComplex& x, std::size_t k)
{
    const CwComplex sk = skeleton(x, k);
    return k == 0 ? sk : quotient_by_skeleton(sk, k - 1);
}

bool in_filtration(const CwComplex& x, int k)
{
    return k >= 0 && static_cast<std::size_t>(k) <= x.dim();
}

} // namespace

DimRange default_range(const CwComplex& x)
{
    return {-1, static_cast<int>(x.dim()) + 2};
}

std::string render(const CheckReport& report)
{
    std::ostringstream os;
    os << (report.passed ? "PASS " : "FAIL ") << report.check << ' ' << report.subject
       << " G=" << format_group(report.coefficients) << " dims=" << range_text(report.range);
    for (const auto& w : report.witnesses) os << "\n    " << w;
    return os.str();
}

CohomologyEngine cellular_engine()
{
    return [](const CwComplex& x, int n, const FgAbGroup& g) { return cohomology(x, n, g, true).group(); };
}

CheckReport check_dimension(const FgAbGroup& coefficients, DimRange range, const CohomologyEngine& engine)
{
    const CwComplex s0 = zoo::sphere(0);
    CheckReport report = start("dimension", s0.name(), coefficients, range);
    for (int n = range.lo; n <= range.hi; ++n) {
        const FgAbGroup got = engine(s0, n, coefficients);
        const FgAbGroup want = n == 0 ? coefficients : FgAbGroup::trivial();
        if (!(got == want))
            report.fail("n=" + std::to_string(n) + ": h^n(S^0) = " + format_group(got) + ", expected " +
                        format_group(want));
    }
    return report;
}

CheckReport check_suspension(const CwComplex& x, const FgAbGroup& coefficients, DimRange range,
                             const CohomologyEngine& engine)
{
    CheckReport report = start("suspension", x.name(), coefficients, range);
    const CwComplex sx = suspension(x);
    for (int n = range.lo; n <= range.hi; ++n) {
        const FgAbGroup below = engine(x, n, coefficients);
        const FgAbGroup above = engine(sx, n + 1, coefficients);
        if (!(below == above))
            report.fail("n=" + std::to_string(n) + ": h^n(X) = " + format_group(below) + " but h^(n+1)(susp X) = " +
                        format_group(above));
    }
    return report;
}

CheckReport check_wedge(const std::vector<CwComplex>& xs, const FgAbGroup& coefficients, DimRange range,
                        const CohomologyEngine& engine)
{
    const CwComplex w = wedge(xs);
    CheckReport report = start("wedge", w.name(), coefficients, range);
    for (int n = range.lo; n <= range.hi; ++n) {
        FgAbGroup sum;
        for (const auto& x : xs) sum = direct_sum(sum, engine(x, n, coefficients));
        const FgAbGroup got = engine(w, n, coefficients);
        if (!(got == sum))
            report.fail("n=" + std::to_string(n) + ": h^n(wedge) = " + format_group(got) + " but the summands give " +
                        format_group(sum));
    }
    return report;
}

CheckReport check_les_exactness(const ChainMap& f, const FgAbGroup& coefficients, DimRange range)
{
    CheckReport report = start("les", map_subject(f), coefficients, range);
    const MappingCone cone = mapping_cone(f);
    auto restrict_cone = [&](int n) {
        return induced_map(cone.inclusion, n, coefficients, Variant::cohomology, true);
    };
    auto pull_back = [&](int n) { return induced_map(f, n, coefficients, Variant::cohomology, true); };

    auto check_pair = [&](const AbHom& g, const AbHom& h, const std::string& node) {
        if (is_exact_pair(g, h)) return;
        std::string gap;
        try {
            gap = "kernel/image = " + format_group(middle_homology(g, h).group());
        } catch (const ContainmentViolation&) {
            gap = "image not inside kernel";
        }
        report.fail(node + ": image " + format_group(hom_image(g)) + ", kernel " + format_group(hom_kernel(h)) + ", " +
                    gap);
    };

    for (int n = range.lo; n <= range.hi; ++n) {
        const AbHom i_n = restrict_cone(n);
        const AbHom f_n = pull_back(n);
        const AbHom gamma = connecting_map(f, cone, n, coefficients);
        const std::string at = std::to_string(n);
        check_pair(i_n, f_n, "h^" + at + "(Y)");
        check_pair(f_n, gamma, "h^" + at + "(X)");
        if (n + 1 <= range.hi) check_pair(gamma, restrict_cone(n + 1), "h^" + std::to_string(n + 1) + "(C)");
    }
    return report;
}

GroupWithPresentation skeletal_group(const CwComplex& x, int k, const FgAbGroup& coefficients)
{
    if (!in_filtration(x, k)) return cohomology(zoo::point(), k < 0 ? k : 1, coefficients, true);
    return cohomology(filtration_quotient(x, static_cast<std::size_t>(k)), k, coefficients, true);
}

AbHom skeletal_comparison(const CwComplex& x, int k, const FgAbGroup& coefficients)
{
    const GroupWithPresentation stage = skeletal_group(x, k, coefficients);
    const std::size_t cells = x.cells(k);
    return induced_hom(cochain_module(cells, coefficients), stage, IntMatrix::identity(cells));
}

AbHom skeletal_coboundary(const CwComplex& x, int k, const FgAbGroup& coefficients)
{
    const GroupWithPresentation from = skeletal_group(x, k, coefficients);
    const GroupWithPresentation to = skeletal_group(x, k + 1, coefficients);
    if (!in_filtration(x, k) || !in_filtration(x, k + 1)) return AbHom::zero(from.group(), to.group());

    const std::size_t uk = static_cast<std::size_t>(k);
    // X_(k+1)/X_(k-1), whose k-skeleton is the stage-k quotient.
    const CwComplex pair = uk == 0 ? skeleton(x, 1) : quotient_by_skeleton(skeleton(x, uk + 1), uk - 1);
    const ChainMap inclusion = skeleton_inclusion(pair, uk);
    const MappingCone cone = mapping_cone(inclusion);
    const AbHom gamma = connecting_map(inclusion, cone, k, coefficients);

    // Collapse the cone onto X_(k+1)/X_k: keep the (k+1)-cells of the pair, kill the rest.
    const CwComplex next = filtration_quotient(x, uk + 1);
    const std::size_t top = cone.cone.dim();
    std::vector<IntMatrix> collapse;
    for (std::size_t n = 0; n <= top; ++n) {
        const int d = static_cast<int>(n);
        IntMatrix c(next.cells(d), cone.cone.cells(d));
        if (n == 0)
            for (std::size_t j = 0; j < c.cols(); ++j) c(0, j) = 1;
        if (n == uk + 1)
            for (std::size_t j = 0; j < next.cells(d); ++j) c(j, j) = 1;
        collapse.push_back(std::move(c));
    }
    const ChainMap comparison(cone.cone, next, std::move(collapse));
    const auto check = validate_map(comparison);
    if (!check.ok())
        throw IsoTransportFailure("cone-vs-quotient comparison is not a chain map: " + check.violations[0].detail);

    const AbHom pulled = induced_map(comparison, k + 1, coefficients, Variant::cohomology, true);
    try {
        return compose(invert_iso(pulled), gamma);
    } catch (const NotAnIsomorphism& e) {
        throw IsoTransportFailure(std::string("cone-vs-quotient comparison: ") + e.what());
    }
}

CheckReport check_skeletal_reformulation(const CwComplex& x, const FgAbGroup& coefficients, int n)
{
    CheckReport report = start("reformulation", x.name(), coefficients, {n, n});
    if (!in_filtration(x, n)) {
        report.fail("n=" + std::to_string(n) + " is outside 0.." + std::to_string(x.dim()));
        return report;
    }
    const std::string at = "n=" + std::to_string(n) + ": ";

    const AbHom into = skeletal_coboundary(x, n - 1, coefficients);
    const AbHom out = skeletal_coboundary(x, n, coefficients);

    // (a) kernel-image quotient of the skeletal coboundaries.
    try {
        const FgAbGroup rebuilt = middle_homology(into, out).group();
        const FgAbGroup direct = cohomology(x, n, coefficients, true).group();
        if (!(rebuilt == direct))
            report.fail(at + "ker/im of delta is " + format_group(rebuilt) + " but the cellular group is " +
                        format_group(direct));
    } catch (const ContainmentViolation&) {
        report.fail(at + "delta after delta is nonzero");
    }

    // (b) each stage is a wedge of spheres: one copy of G per cell.
    const std::size_t free_cells = n == 0 ? x.cells(0) - 1 : x.cells(n);
    const FgAbGroup expected = direct_power(coefficients, free_cells);
    const FgAbGroup stage = skeletal_group(x, n, coefficients).group();
    if (!(stage == expected))
        report.fail(at + "stage group is " + format_group(stage) + ", expected " + format_group(expected));

    // (c) delta against hom(boundary, G), one free sign per (n+1)-cell.
    if (!in_filtration(x, n + 1)) return report;
    AbHom back = skeletal_comparison(x, n + 1, coefficients);
    try {
        back = invert_iso(back);
    } catch (const NotAnIsomorphism& e) {
        throw IsoTransportFailure(std::string("cochains to stage group: ") + e.what());
    }
    const AbHom transported = compose(back, compose(out, skeletal_comparison(x, n, coefficients)));

    const GroupWithPresentation here = cochain_module(x.cells(n), coefficients);
    const GroupWithPresentation there = cochain_module(x.cells(n + 1), coefficients);
    const IntMatrix boundary = x.boundary(n + 1);
    const IntVector& moduli = here.block_moduli();
    const std::size_t ca = x.cells(n), cb = x.cells(n + 1);
    std::vector<bool> plus_ok(cb, true), minus_ok(cb, true);

    for (std::size_t block = 0; block < moduli.size(); ++block)
        for (std::size_t a = 0; a < ca; ++a) {
            IntVector unit(ca * moduli.size());
            unit[block * ca + a] = 1;
            const IntVector image = there.lifts().apply(transported.apply(here.coordinates(unit)));
            for (std::size_t b = 0; b < cb; ++b) {
                const Integer& got = image[block * cb + b];
                const Integer& want = boundary(a, b);
                if (reduce_mod(got - want, moduli[block]) != 0) plus_ok[b] = false;
                if (reduce_mod(got + want, moduli[block]) != 0) minus_ok[b] = false;
            }
        }
    for (std::size_t b = 0; b < cb; ++b)
        if (!plus_ok[b] && !minus_ok[b])
            report.fail(at + "delta differs from the dual boundary on (n+1)-cell " + std::to_string(b) +
                        " under either sign");
    return report;
}

} // namespace cwcoh
