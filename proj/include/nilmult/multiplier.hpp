#pragma once

#include "nilmult/commutators.hpp"
#include "nilmult/fgab.hpp"
#include "nilmult/homalg.hpp"

#include <cstdint>
#include <vector>

namespace nilmult {

/// The c-nilpotent multiplier of a finitely generated abelian group
/// G = Z^(n) + Z_{n1} + ... + Z_{nk}:
///
///     Z^(b_n) + Z_{n1}^(b_{n+1}-b_n) + ... + Z_{nk}^(b_{n+k}-b_{n+k-1})
///
/// with b_j = witt_count(j, c+1). Multiplicities are telescoped per compressed
/// entry, so only one b per distinct invariant factor is ever evaluated. The
/// formula covers every free rank and torsion length, including k in {0,1}
/// (cyclic groups have trivial multiplier, Z^(n) gives Z^(b_n)).
inline FgAbGroup nilpotent_multiplier(const FgAbGroup& g, std::int64_t c) {
    MultiplierParams params(c);
    Integer pos = g.free_rank();
    const Integer head = params.b(pos);
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (const auto& [factor, mult] : g.torsion()) {
        const Integer lo = params.b(pos);
        pos += mult;
        parts.emplace_back(factor, params.b(pos) - lo);
    }
    return FgAbGroup::from_summands(head, parts);
}

/// The Schur multiplier M(G), i.e. the class-1 case.
inline FgAbGroup schur_multiplier(const FgAbGroup& g) {
    return nilpotent_multiplier(g, 1);
}

/// Schur-Wiegold: M(A x B) = M(A) + M(B) + (A @ B) for abelian A, B (which
/// are their own abelianizations).
inline FgAbGroup schur_direct_product(const FgAbGroup& a, const FgAbGroup& b) {
    return direct_sum(direct_sum(schur_multiplier(a), schur_multiplier(b)), tensor(a, b));
}

/// Burns-Ellis for the free product of two finitely generated abelian groups:
/// N2M(A*B) = N2M(A) + N2M(B) + (M(A) @ B) + (A @ M(B)) + Tor_1(A, B).
inline FgAbGroup free_product_n2(const FgAbGroup& a, const FgAbGroup& b) {
    FgAbGroup out = direct_sum(nilpotent_multiplier(a, 2), nilpotent_multiplier(b, 2));
    out = direct_sum(out, tensor(schur_multiplier(a), b));
    out = direct_sum(out, tensor(a, schur_multiplier(b)));
    return direct_sum(out, tor1(a, b));
}

/// Free product of finite cyclic groups of pairwise coprime order: the
/// multiplier functor preserves this coproduct, and each factor contributes
/// trivially. Non-coprime input is rejected because the formula genuinely
/// fails there (Z_2 * Z_2 already has N2M = Z_2).
inline FgAbGroup free_product_coprime_cyclic(const std::vector<Integer>& orders,
                                             std::int64_t c) {
    if (c < 1)
        throw std::invalid_argument("free_product_coprime_cyclic: class must be >= 1");
    for (const Integer& d : orders)
        if (d < 2)
            throw std::invalid_argument(
                "free_product_coprime_cyclic: cyclic orders must be >= 2");
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            if (gcd(orders[i], orders[j]) != 1)
                throw std::invalid_argument(
                    "free_product_coprime_cyclic: orders must be pairwise coprime "
                    "(the multiplier does not preserve general free products)");
    return FgAbGroup::trivial();
}

}  // namespace nilmult
