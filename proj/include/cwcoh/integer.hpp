#ifndef CWCOH_INTEGER_HPP
#define CWCOH_INTEGER_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace cwcoh {

/// Arbitrary-precision integer used for every matrix entry and group order.
using Integer = boost::multiprecision::mpz_int;

using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm_of(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    return abs_value(a / gcd_of(a, b) * b);
}

/// Non-negative residue of a modulo m; m == 0 means no reduction.
inline Integer reduce_mod(const Integer& a, const Integer& m)
{
    if (m == 0) return a;
    Integer r = a % m;
    if (r < 0) r += abs_value(m);
    return r;
}

inline std::string to_string(const Integer& a) { return a.str(); }

} // namespace cwcoh

#endif
