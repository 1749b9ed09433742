#pragma once

#include "nilmult/fgab.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilmult {

/// Syntax error with the byte offset it occurred at.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Group expressions:
///
///     expr := sum ('*' sum)*          free product, top level only
///     sum  := atom ('+' atom)*        direct sum
///     atom := 'Z' ('^' NAT)?          Z, Z^r
///           | 'Z' NAT ('^' NAT)?      Z_d, Z_d^r (d >= 1)
///           | '1'                     trivial group
///
/// Whitespace is insignificant. '1' is accepted so rendered groups round-trip.
struct GroupExpr {
    struct Atom {
        Integer order;  // 0 for Z
        Integer power;
        std::size_t offset;
    };
    using Sum = std::vector<Atom>;

    std::vector<Sum> factors;  // top-level free factors

    bool is_free_product() const { return factors.size() > 1; }
};

inline GroupExpr parse_group(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto at_digit = [&] { return pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; };
    auto parse_nat = [&]() -> Integer {
        skip_ws();
        if (!at_digit()) throw parse_error("expected a number", pos);
        Integer value = 0;
        while (at_digit()) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };
    auto parse_atom = [&]() -> GroupExpr::Atom {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size())
            throw parse_error("expected a group atom ('Z', 'Z<d>' or '1')", pos);
        if (text[pos] == '1') {
            ++pos;
            return {1, 1, start};
        }
        if (text[pos] != 'Z')
            throw parse_error("expected a group atom ('Z', 'Z<d>' or '1')", pos);
        ++pos;
        skip_ws();
        Integer order = 0;
        if (at_digit()) {
            const std::size_t digits_at = pos;
            order = parse_nat();
            if (order == 0)
                throw parse_error("cyclic order must be >= 1 (plain Z is the infinite "
                                  "cyclic group)",
                                  digits_at);
        }
        skip_ws();
        Integer power = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            power = parse_nat();
        }
        return {order, power, start};
    };

    GroupExpr expr;
    skip_ws();
    if (pos >= text.size()) throw parse_error("empty group expression", pos);
    while (true) {
        GroupExpr::Sum sum{parse_atom()};
        skip_ws();
        while (pos < text.size() && text[pos] == '+') {
            ++pos;
            sum.push_back(parse_atom());
            skip_ws();
        }
        expr.factors.push_back(std::move(sum));
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            continue;
        }
        break;
    }
    skip_ws();
    if (pos < text.size()) throw parse_error("unexpected character", pos);
    return expr;
}

/// Canonical group denoted by one direct-sum factor.
inline FgAbGroup eval_sum(const GroupExpr::Sum& sum) {
    Integer free = 0;
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (const auto& atom : sum) {
        if (atom.order == 0)
            free += atom.power;
        else
            parts.emplace_back(atom.order, atom.power);
    }
    return FgAbGroup::from_summands(free, parts);
}

inline std::vector<FgAbGroup> eval_factors(const GroupExpr& expr) {
    std::vector<FgAbGroup> out;
    out.reserve(expr.factors.size());
    for (const auto& sum : expr.factors) out.push_back(eval_sum(sum));
    return out;
}

}  // namespace nilmult
