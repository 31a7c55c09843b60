#include "catch_amalgamated.hpp"

#include "cwcoh/errors.hpp"
#include "cwcoh/verify.hpp"

using namespace cwcoh;

namespace {

FgAbGroup g(const char* text)
{
    return parse_group(text);
}

bool witness_mentions(const CheckReport& r, const std::string& text)
{
    for (const auto& w : r.witnesses)
        if (w.find(text) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("dimension check")
{
    CHECK(check_dimension(g("Z/6"), {-3, 3}).passed);
    CHECK(check_dimension(g("Z + Z/4"), {-2, 2}).passed);

    // Negative control: an engine that claims H^1(S^0) = Z.
    const CohomologyEngine honest = cellular_engine();
    const CohomologyEngine corrupted = [&](const CwComplex& x, int n, const FgAbGroup& G) {
        if (n == 1 && x == zoo::sphere(0)) return FgAbGroup::free(1);
        return honest(x, n, G);
    };
    const CheckReport r = check_dimension(g("Z"), {-1, 3}, corrupted);
    CHECK_FALSE(r.passed);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(witness_mentions(r, "n=1"));
    CHECK(witness_mentions(r, "= Z,"));
}

TEST_CASE("suspension and wedge checks")
{
    CHECK(check_suspension(zoo::torus(), g("Z"), {0, 4}).passed);
    CHECK(check_wedge({zoo::sphere(1), zoo::sphere(2), zoo::klein()}, g("Z/2"), {0, 3}).passed);
    for (std::size_t n = 0; n <= 3; ++n) {
        const CwComplex s = zoo::sphere(n);
        const int k = static_cast<int>(n);
        CHECK(check_wedge({s, s, s}, g("Z"), {k, k}).passed);
        CHECK(cohomology(wedge({s, s, s}), k, g("Z"), true).group() == g("Z^3"));
    }

    // A broken engine that forgets torsion in suspensions is caught.
    const CohomologyEngine honest = cellular_engine();
    const CohomologyEngine torsion_blind = [&](const CwComplex& x, int n, const FgAbGroup& G) {
        const FgAbGroup h = honest(x, n, G);
        return x.name().rfind("susp", 0) == 0 ? FgAbGroup::free(h.rank()) : h;
    };
    const CheckReport bad = check_suspension(zoo::real_projective(3), g("Z"), {0, 4}, torsion_blind);
    CHECK_FALSE(bad.passed);
    CHECK(witness_mentions(bad, "n=2"));

    const CohomologyEngine wedge_blind = [&](const CwComplex& x, int n, const FgAbGroup& G) {
        return x.name().rfind("wedge", 0) == 0 ? FgAbGroup{} : honest(x, n, G);
    };
    CHECK_FALSE(check_wedge({zoo::sphere(1), zoo::sphere(1)}, g("Z"), {0, 2}, wedge_blind).passed);
}

TEST_CASE("exactness checks")
{
    CHECK(check_les_exactness(sphere_self_map(2, 6), g("Z"), {-1, 4}).passed);
    CHECK(check_les_exactness(skeleton_inclusion(zoo::real_projective(3), 1), g("Z"), {-1, 5}).passed);
    CHECK(check_les_exactness(identity_map(zoo::torus()), g("Z"), {-1, 4}).passed);
    for (const auto& x : {zoo::klein(), zoo::complex_projective(2), zoo::lens(3)})
        for (std::size_t m = 0; m < x.dim(); ++m)
            CHECK(check_les_exactness(skeleton_inclusion(x, m), g("Z/6"), default_range(x)).passed);
}

TEST_CASE("skeletal reformulation")
{
    CHECK(check_skeletal_reformulation(zoo::real_projective(3), g("Z"), 2).passed);
    CHECK(skeletal_group(zoo::real_projective(3), 2, g("Z")).group() == g("Z"));
    CHECK(check_skeletal_reformulation(zoo::torus(), g("Z/2"), 1).passed);
    for (long q : {2, 3, 5})
        for (std::size_t n : {1, 2}) {
            const CwComplex m = zoo::moore(q, n);
            CHECK(check_skeletal_reformulation(m, g("Z"), static_cast<int>(n) + 1).passed);
            CHECK(cohomology(m, static_cast<int>(n) + 1, g("Z"), true).group() == FgAbGroup::cyclic(q));
        }

    // delta on rp3 is x2 then 0, up to sign.
    const AbHom d1 = skeletal_coboundary(zoo::real_projective(3), 1, g("Z"));
    const AbHom d2 = skeletal_coboundary(zoo::real_projective(3), 2, g("Z"));
    CHECK(abs_value(d1.matrix()(0, 0)) == 2);
    CHECK(d2.matrix().is_zero());

    // Out of range n is reported, not thrown.
    const CheckReport r = check_skeletal_reformulation(zoo::torus(), g("Z"), 3);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("report rendering")
{
    const CheckReport ok = check_dimension(g("Z/6"), {-1, 2});
    CHECK(render(ok) == "PASS dimension sphere0 G=Z/6 dims=-1..2");
    CheckReport bad = ok;
    bad.fail("n=1: something");
    CHECK(render(bad) == "FAIL dimension sphere0 G=Z/6 dims=-1..2\n    n=1: something");
}
