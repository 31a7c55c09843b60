#include "catch_amalgamated.hpp"

#include "cwcoh/complex.hpp"
#include "cwcoh/errors.hpp"
#include "cwcoh/homology.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace cwcoh;

namespace {

FgAbGroup g(const char* text)
{
    return parse_group(text);
}

std::vector<FgAbGroup> integral(const CwComplex& x)
{
    std::vector<FgAbGroup> out;
    for (int n = 0; n <= static_cast<int>(x.dim()); ++n) out.push_back(integral_homology(x, n).group());
    return out;
}

/// Hom(A, Z/m) and Ext(A, Z/m) for A in canonical form (m = 0 means Z).
FgAbGroup hom_into(const FgAbGroup& a, const Integer& m)
{
    FgAbGroup out = direct_power(FgAbGroup::cyclic(m), a.rank());
    for (const Integer& d : a.torsion()) out = direct_sum(out, FgAbGroup::cyclic(m == 0 ? Integer(1) : gcd_of(d, m)));
    return out;
}

FgAbGroup ext_into(const FgAbGroup& a, const Integer& m)
{
    FgAbGroup out;
    for (const Integer& d : a.torsion()) out = direct_sum(out, FgAbGroup::cyclic(m == 0 ? d : gcd_of(d, m)));
    return out;
}

/// A ⊗ Z/m and Tor(A, Z/m).
FgAbGroup tensor(const FgAbGroup& a, const Integer& m)
{
    return m == 0 ? a : hom_into(a, m);
}

FgAbGroup tor(const FgAbGroup& a, const Integer& m)
{
    return m == 0 ? FgAbGroup{} : ext_into(a, m);
}

/// Universal coefficients, summed over the cyclic factors of G.
FgAbGroup uct_cohomology(const CwComplex& x, int n, const FgAbGroup& coeff)
{
    FgAbGroup out;
    const FgAbGroup hn = integral_homology(x, n).group();
    const FgAbGroup hn1 = integral_homology(x, n - 1).group();
    for (const Integer& m : coeff.generator_orders()) out = direct_sum(out, direct_sum(hom_into(hn, m), ext_into(hn1, m)));
    return out;
}

FgAbGroup uct_homology(const CwComplex& x, int n, const FgAbGroup& coeff)
{
    FgAbGroup out;
    const FgAbGroup hn = integral_homology(x, n).group();
    const FgAbGroup hn1 = integral_homology(x, n - 1).group();
    for (const Integer& m : coeff.generator_orders()) out = direct_sum(out, direct_sum(tensor(hn, m), tor(hn1, m)));
    return out;
}

std::vector<CwComplex> test_complexes()
{
    auto xs = zoo::corpus();
    xs.push_back(zoo::surface(3));
    xs.push_back(zoo::lens(5));
    xs.push_back(wedge({zoo::klein(), zoo::moore(3, 1), zoo::sphere(2)}));
    xs.push_back(suspension(zoo::real_projective(3)));
    xs.push_back(CwComplex("rp2 twisted", {1, 1, 1}, {IntMatrix{{0}}, IntMatrix{{4}}}));
    return xs;
}

} // namespace

TEST_CASE("integral homology of the zoo")
{
    const FgAbGroup Z = g("Z"), O;
    CHECK(integral(zoo::torus()) == std::vector{Z, g("Z^2"), Z});
    CHECK(integral(zoo::klein()) == std::vector{Z, g("Z + Z/2"), O});
    CHECK(integral(zoo::real_projective(2)) == std::vector{Z, g("Z/2"), O});
    CHECK(integral(zoo::real_projective(3)) == std::vector{Z, g("Z/2"), O, Z});
    CHECK(integral(zoo::real_projective(4)) == std::vector{Z, g("Z/2"), O, g("Z/2"), O});
    CHECK(integral(zoo::complex_projective(2)) == std::vector{Z, O, Z, O, Z});
    CHECK(integral(zoo::lens(7)) == std::vector{Z, g("Z/7"), O, Z});
    for (std::size_t genus = 1; genus <= 4; ++genus)
        CHECK(integral_homology(zoo::surface(genus), 1).group() == FgAbGroup::free(2 * genus));
    CHECK(integral(zoo::sphere(0)) == std::vector{g("Z^2")});
    CHECK(integral_homology(zoo::sphere(0), 0, true).group() == Z);
    CHECK(integral_homology(zoo::torus(), -1).group().is_trivial());
    CHECK(integral_homology(zoo::torus(), 3).group().is_trivial());
}

TEST_CASE("reduced groups differ from unreduced only at 0")
{
    for (const auto& x : test_complexes())
        for (const char* coeff : {"Z", "Z/6", "Z + Z/4"}) {
            const FgAbGroup G = g(coeff);
            for (Variant v : {Variant::homology, Variant::cohomology})
                for (int n = -1; n <= static_cast<int>(x.dim()) + 1; ++n) {
                    const FgAbGroup full = compute_group(x, n, G, v, false).group();
                    const FgAbGroup reduced = compute_group(x, n, G, v, true).group();
                    CHECK(full == (n == 0 ? direct_sum(reduced, G) : reduced));
                }
        }
}

TEST_CASE("cohomology with coefficients matches universal coefficients")
{
    for (const auto& x : test_complexes())
        for (const char* coeff : {"Z", "Z/2", "Z/6", "Z + Z/4", "Z/3 + Z/9"}) {
            const FgAbGroup G = g(coeff);
            for (int n = 0; n <= static_cast<int>(x.dim()) + 1; ++n) {
                INFO(x.name() << " n=" << n << " G=" << coeff);
                CHECK(cohomology(x, n, G).group() == uct_cohomology(x, n, G));
                CHECK(compute_group(x, n, G, Variant::homology, false).group() == uct_homology(x, n, G));
            }
        }
}

TEST_CASE("finite cohomology against cochain enumeration")
{
    const std::vector<std::vector<long>> coefficient_sets{{2}, {3}, {4}, {6}, {2, 4}};
    for (const auto& x : test_complexes()) {
        for (const auto& moduli : coefficient_sets) {
            FgAbGroup G;
            std::size_t largest = 1;
            for (long m : moduli) G = direct_sum(G, FgAbGroup::cyclic(m));
            for (std::size_t c : x.cell_counts()) largest = std::max(largest, c);
            // Keep the enumeration small.
            if (std::pow(G.order().convert_to<double>(), static_cast<double>(largest)) > 5000) continue;
            for (int n = -1; n <= static_cast<int>(x.dim()) + 1; ++n)
                for (bool reduced : {false, true}) {
                    INFO(x.name() << " n=" << n << " G=" << format_group(G) << " reduced=" << reduced);
                    const FgAbGroup got = cohomology(x, n, G, reduced).group();
                    CHECK(oracle::same_torsion_profile(got, oracle::brute_cohomology(x, n, moduli, reduced)));
                }
        }
    }
}

TEST_CASE("reduced cohomology of spheres")
{
    for (const char* coeff : {"Z", "Z/2", "Z/6", "Z + Z/4"})
        for (std::size_t n = 0; n <= 4; ++n)
            for (int m = -1; m <= 5; ++m) {
                const FgAbGroup G = g(coeff);
                const FgAbGroup got = cohomology(zoo::sphere(n), m, G, true).group();
                CHECK(got == (m == static_cast<int>(n) ? G : FgAbGroup{}));
            }
}

TEST_CASE("presentations: lifts are cycles and coordinates invert them")
{
    for (const auto& x : test_complexes())
        for (const char* coeff : {"Z", "Z/6", "Z + Z/4"})
            for (Variant v : {Variant::homology, Variant::cohomology})
                for (int n = 0; n <= static_cast<int>(x.dim()); ++n) {
                    const auto p = compute_group(x, n, g(coeff), v, true);
                    const FgAbGroup& grp = p.group();
                    for (std::size_t i = 0; i < grp.generator_count(); ++i) {
                        const IntVector lift = p.lifts().column(i);
                        CHECK(p.is_cycle(lift));
                        IntVector e(grp.generator_count());
                        e[i] = 1;
                        CHECK(p.coordinates(lift) == e);
                    }
                }
}

TEST_CASE("cochain modules and induced homomorphisms")
{
    const auto m = cochain_module(3, g("Z + Z/4"));
    CHECK(m.group() == g("Z^3 + (Z/4)^3"));
    CHECK(m.block_moduli() == IntVector{0, 4});

    // Cochains on the 1-cells of the torus onto H^1.
    const auto h1 = cohomology(zoo::torus(), 1, g("Z/6"));
    const AbHom onto = induced_hom(cochain_module(2, g("Z/6")), h1, IntMatrix::identity(2));
    CHECK(is_surjective(onto));
    CHECK(is_injective(onto));
}

TEST_CASE("invalid complexes are refused")
{
    const CwComplex broken("broken", {1, 1, 1, 1}, {IntMatrix{{0}}, IntMatrix{{2}}, IntMatrix{{1}}});
    CHECK_THROWS_AS(integral_homology(broken, 1), InvalidComplex);
}
