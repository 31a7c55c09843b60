#ifndef CWCOH_VERIFY_HPP
#define CWCOH_VERIFY_HPP

#include "cwcoh/ab_hom.hpp"
#include "cwcoh/chain_map.hpp"
#include "cwcoh/complex.hpp"
#include "cwcoh/homology.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cwcoh {

struct DimRange
{
    int lo;
    int hi;
};

/// Default range for a complex: -1 .. dim + 2.
DimRange default_range(const CwComplex& x);

/// Outcome of one check. A failing report always carries witnesses.
struct CheckReport
{
    std::string check;
    std::string subject;
    FgAbGroup coefficients;
    DimRange range;
    bool passed = true;
    std::vector<std::string> witnesses;

    void fail(std::string witness)
    {
        passed = false;
        witnesses.push_back(std::move(witness));
    }
};

/// `PASS|FAIL <check> <subject> G=<group> dims=<lo>..<hi>`, witnesses indented below.
std::string render(const CheckReport& report);

/// Reduced cohomology h^n(x; G), as seen by the axiom checks. Replaceable so
/// the checks themselves can be tested against a broken engine.
using CohomologyEngine = std::function<FgAbGroup(const CwComplex&, int, const FgAbGroup&)>;
CohomologyEngine cellular_engine();

/// h^n(S^0) is G at n = 0 and trivial elsewhere.
CheckReport check_dimension(const FgAbGroup& coefficients, DimRange range,
                            const CohomologyEngine& engine = cellular_engine());

/// h^(n+1)(susp x) == h^n(x) for n in range.
CheckReport check_suspension(const CwComplex& x, const FgAbGroup& coefficients, DimRange range,
                             const CohomologyEngine& engine = cellular_engine());

/// h^n(wedge xs) == sum of h^n(x_i) for n in range.
CheckReport check_wedge(const std::vector<CwComplex>& xs, const FgAbGroup& coefficients, DimRange range,
                        const CohomologyEngine& engine = cellular_engine());

/**
 * Exactness of  h^n(C) -> h^n(Y) -> h^n(X) -> h^(n+1)(C) -> ...  for the
 * cofiber sequence X -> Y -> C of a pointed map f, at every node whose
 * indices lie in range.
 */
CheckReport check_les_exactness(const ChainMap& f, const FgAbGroup& coefficients, DimRange range);

/**
 * Stage k of the skeletal filtration: h^k(X_k / X_(k-1)) in reduced
 * cohomology, with X_0 itself at k = 0. Trivial beyond dim.
 */
GroupWithPresentation skeletal_group(const CwComplex& x, int k, const FgAbGroup& coefficients);

/**
 * delta : h^k(X_k/X_(k-1)) -> h^(k+1)(X_(k+1)/X_k), the connecting map of
 * X_k/X_(k-1) -> X_(k+1)/X_(k-1) moved onto the literal quotient through the
 * inverse of the cone-vs-quotient comparison. Throws IsoTransportFailure.
 */
AbHom skeletal_coboundary(const CwComplex& x, int k, const FgAbGroup& coefficients);

/// Cellular cochains hom(Z[A_k], G) -> h^k(X_k/X_(k-1)).
AbHom skeletal_comparison(const CwComplex& x, int k, const FgAbGroup& coefficients);

/**
 * Rebuilds h^n(x; G) from the skeletal filtration and checks that
 * (a) ker delta / im delta agrees with the cellular group,
 * (b) the stage group is G^(cells) (G^(cells - 1) at n = 0, where the
 *     constant cochains are divided out), and
 * (c) delta is the dual boundary up to one sign per (n+1)-cell.
 */
CheckReport check_skeletal_reformulation(const CwComplex& x, const FgAbGroup& coefficients, int n);

} // namespace cwcoh

#endif
