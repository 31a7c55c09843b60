#ifndef CWCOH_AB_GROUP_HPP
#define CWCOH_AB_GROUP_HPP

#include "cwcoh/integer.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace cwcoh {

/**
 * Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk in
 * invariant-factor form: every d_i >= 2 and d1 | d2 | ... | dk.
 *
 * The form is unique, so structural equality is isomorphism.
 */
class FgAbGroup
{
public:
    FgAbGroup() = default;

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t rank);
    static FgAbGroup cyclic(const Integer& order);

    std::size_t rank() const { return rank_; }
    const IntVector& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return rank_ == 0; }
    /// Cardinality of a finite group; 0 stands for infinite.
    Integer order() const;

    /// Number of canonical generators: rank free ones followed by the torsion chain.
    std::size_t generator_count() const { return rank_ + torsion_.size(); }
    /// Order of each canonical generator, 0 meaning infinite.
    IntVector generator_orders() const;

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

private:
    friend FgAbGroup normalize_diagonal(std::span<const Integer> diagonal, std::size_t extra_free);

    std::size_t rank_ = 0;
    IntVector torsion_;
};

/// Canonical group Z^extra_free + sum of Z/|d| over the diagonal (0 counts as Z).
FgAbGroup normalize_diagonal(std::span<const Integer> diagonal, std::size_t extra_free = 0);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup direct_power(const FgAbGroup& a, std::size_t k);

/**
 * Grammar:  G    := '0' | term ('+' term)*
 *           term := 'Z' | 'Z^'k | 'Z/'d | '(Z/'d')^'k      (k >= 1, d >= 2)
 * Whitespace is allowed between tokens. Throws ParseError.
 */
FgAbGroup parse_group(std::string_view text);

/// Free part first, then the torsion chain; repeated factors are written (Z/d)^k.
std::string format_group(const FgAbGroup& g);

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g);

} // namespace cwcoh

#endif
