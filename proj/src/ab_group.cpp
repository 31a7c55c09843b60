#include "cwcoh/ab_group.hpp"

#include "cwcoh/errors.hpp"
#include "cwcoh/int_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace cwcoh {

FgAbGroup FgAbGroup::free(std::size_t rank)
{
    return normalize_diagonal({}, rank);
}

FgAbGroup FgAbGroup::cyclic(const Integer& order)
{
    const Integer d[] = {order};
    return normalize_diagonal(d);
}

Integer FgAbGroup::order() const
{
    if (rank_ > 0) return 0;
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

IntVector FgAbGroup::generator_orders() const
{
    IntVector orders(rank_, Integer(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    return orders;
}

FgAbGroup normalize_diagonal(std::span<const Integer> diagonal, std::size_t extra_free)
{
    FgAbGroup g;
    g.rank_ = extra_free;
    IntVector torsion;
    for (const auto& d : diagonal) {
        if (d == 0)
            ++g.rank_;
        else if (abs_value(d) != 1)
            torsion.push_back(abs_value(d));
    }
    const bool chain = std::is_sorted(torsion.begin(), torsion.end()) &&
                       std::adjacent_find(torsion.begin(), torsion.end(), [](const Integer& a, const Integer& b) {
                           return b % a != 0;
                       }) == torsion.end();
    if (!chain) {
        const SnfResult d = snf(IntMatrix::diagonal(torsion));
        torsion.clear();
        for (const auto& s : d.diagonal())
            if (s != 1) torsion.push_back(s);
    }
    g.torsion_ = std::move(torsion);
    return g;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b)
{
    IntVector diag = a.torsion();
    diag.insert(diag.end(), b.torsion().begin(), b.torsion().end());
    return normalize_diagonal(diag, a.rank() + b.rank());
}

FgAbGroup direct_power(const FgAbGroup& a, std::size_t k)
{
    FgAbGroup g;
    for (std::size_t i = 0; i < k; ++i) g = direct_sum(g, a);
    return g;
}

namespace {

class GroupParser
{
public:
    explicit GroupParser(std::string_view text) : text_(text) {}

    FgAbGroup parse()
    {
        skip_ws();
        if (peek() == '0') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) fail("unexpected trailing input");
            return FgAbGroup::trivial();
        }
        IntVector diag;
        std::size_t rank = 0;
        term(diag, rank);
        skip_ws();
        while (pos_ < text_.size()) {
            expect('+');
            skip_ws();
            term(diag, rank);
            skip_ws();
        }
        return normalize_diagonal(diag, rank);
    }

private:
    void term(IntVector& diag, std::size_t& rank)
    {
        if (peek() == '(') {
            ++pos_;
            expect('Z');
            expect('/');
            const Integer d = modulus();
            expect(')');
            expect('^');
            const Integer k = number("exponent");
            if (k < 1) fail("exponent must be at least 1");
            for (Integer i = 0; i < k; ++i) diag.push_back(d);
            return;
        }
        expect('Z');
        if (peek() == '^') {
            ++pos_;
            const Integer k = number("exponent");
            if (k < 1) fail("exponent must be at least 1");
            rank += static_cast<std::size_t>(k);
        } else if (peek() == '/') {
            ++pos_;
            diag.push_back(modulus());
        } else {
            ++rank;
        }
    }

    Integer modulus()
    {
        const std::size_t at = pos_;
        Integer d = number("modulus");
        if (d < 2) throw ParseError("cyclic order must be at least 2", at);
        return d;
    }

    Integer number(const char* what)
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

FgAbGroup parse_group(std::string_view text)
{
    return GroupParser(text).parse();
}

std::string format_group(const FgAbGroup& g)
{
    if (g.is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    if (g.rank() == 1)
        append("Z");
    else if (g.rank() > 1)
        append("Z^" + std::to_string(g.rank()));
    const auto& t = g.torsion();
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        const std::size_t k = j - i;
        append(k == 1 ? "Z/" + t[i].str() : "(Z/" + t[i].str() + ")^" + std::to_string(k));
        i = j;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FgAbGroup& g)
{
    return os << format_group(g);
}

} // namespace cwcoh
