#pragma once

#include "nilmult/fgab.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nilmult {

namespace detail {

// Every functor here is additive in both arguments (Lemma-style additivity
// over finite direct sums), so it is determined by a 2x2 base table on cyclic
// summands. Summands are encoded by order with 0 standing for Z; a rule result
// of 0 contributes a Z summand, 1 contributes nothing.
template <typename Rule>
FgAbGroup bilinear_extend(const FgAbGroup& a, const FgAbGroup& b, Rule rule) {
    std::vector<std::pair<Integer, Integer>> as, bs;  // (order-or-0, multiplicity)
    if (a.free_rank() > 0) as.emplace_back(0, a.free_rank());
    for (const auto& [f, m] : a.torsion()) as.emplace_back(f, m);
    if (b.free_rank() > 0) bs.emplace_back(0, b.free_rank());
    for (const auto& [f, m] : b.torsion()) bs.emplace_back(f, m);

    Integer free = 0;
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (const auto& [fa, ma] : as)
        for (const auto& [fb, mb] : bs) {
            const Integer value = rule(fa, fb);
            if (value == 0)
                free += ma * mb;
            else if (value > 1)
                parts.emplace_back(value, ma * mb);
        }
    return FgAbGroup::from_summands(free, parts);
}

}  // namespace detail

/// Tensor product over Z: Z@Z=Z, Z@Z_d=Z_d, Z_a@Z_b=Z_(a,b).
inline FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b) {
    return detail::bilinear_extend(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return y;
        if (y == 0) return x;
        return gcd(x, y);
    });
}

/// Hom(Z,Z)=Z, Hom(Z,Z_d)=Z_d, Hom(Z_a,Z)=0, Hom(Z_a,Z_b)=Z_(a,b).
inline FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& b) {
    return detail::bilinear_extend(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return y;
        if (y == 0) return Integer(1);
        return gcd(x, y);
    });
}

/// Ext^1(Z,-)=0 (Z is projective); Ext^1(Z_a,B)=B/aB, i.e. Z_a per Z summand
/// of B and Z_(a,b) per Z_b summand, using Z_b/aZ_b = Z_(a,b) as normal form.
inline FgAbGroup ext1(const FgAbGroup& a, const FgAbGroup& b) {
    return detail::bilinear_extend(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return Integer(1);
        if (y == 0) return x;
        return gcd(x, y);
    });
}

/// Tor_1 vanishes against Z and Tor_1(Z_a,Z_b)=Z_(a,b) (the m-torsion B[m]).
inline FgAbGroup tor1(const FgAbGroup& a, const FgAbGroup& b) {
    return detail::bilinear_extend(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0 || y == 0) return Integer(1);
        return gcd(x, y);
    });
}

/// Ext^n over Z vanishes for n >= 2 (global dimension one).
inline FgAbGroup ext_n(const FgAbGroup&, const FgAbGroup&, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("ext_n: defined for n >= 2 only");
    return FgAbGroup::trivial();
}

/// Tor_n over Z vanishes for n >= 2.
inline FgAbGroup tor_n(const FgAbGroup&, const FgAbGroup&, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("tor_n: defined for n >= 2 only");
    return FgAbGroup::trivial();
}

}  // namespace nilmult
