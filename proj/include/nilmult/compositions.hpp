#pragma once

#include "nilmult/errors.hpp"
#include "nilmult/fgab.hpp"
#include "nilmult/homalg.hpp"
#include "nilmult/multiplier.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilmult {

/// The commutation identities under test. T34_* are the six parts of the
/// Ext/Tor theorem, T36_* the closed-form parts of the Hom/tensor theorem.
/// EX_A..EX_G label the counterexample suite; they have no closed form and
/// closed_form/pipeline reject them.
enum class CompositionId {
    T34_I,    // NcM(Ext1(Z_m, D))
    T34_II,   // Ext1(Z_m, NcM(D))
    T34_III,  // NcM(Ext1(D, Z_m))
    T34_IV,   // Ext1(NcM(D), Z_m)
    T34_V,    // NcM(Tor1(Z_m, D))
    T34_VI,   // Tor1(Z_m, NcM(D))
    T36_I,    // NcM(Hom(Z_m, D))
    T36_II,   // Hom(Z_m, NcM(D))
    T36_IV,   // NcM(Hom(D, Z_m))   vs partner Hom(NcM(D), Z_m)
    T36_V,    // NcM(Z_m @ D)       vs partner Z_m @ NcM(D)
    EX_A,
    EX_B,
    EX_C,
    EX_D,
    EX_E,
    EX_F,
    EX_G,
};

inline const std::vector<CompositionId>& theorem_ids() {
    static const std::vector<CompositionId> ids = {
        CompositionId::T34_I,  CompositionId::T34_II, CompositionId::T34_III,
        CompositionId::T34_IV, CompositionId::T34_V,  CompositionId::T34_VI,
        CompositionId::T36_I,  CompositionId::T36_II, CompositionId::T36_IV,
        CompositionId::T36_V,
    };
    return ids;
}

inline std::string to_string(CompositionId id) {
    switch (id) {
        case CompositionId::T34_I: return "T34_I";
        case CompositionId::T34_II: return "T34_II";
        case CompositionId::T34_III: return "T34_III";
        case CompositionId::T34_IV: return "T34_IV";
        case CompositionId::T34_V: return "T34_V";
        case CompositionId::T34_VI: return "T34_VI";
        case CompositionId::T36_I: return "T36_I";
        case CompositionId::T36_II: return "T36_II";
        case CompositionId::T36_IV: return "T36_IV";
        case CompositionId::T36_V: return "T36_V";
        case CompositionId::EX_A: return "EX_A";
        case CompositionId::EX_B: return "EX_B";
        case CompositionId::EX_C: return "EX_C";
        case CompositionId::EX_D: return "EX_D";
        case CompositionId::EX_E: return "EX_E";
        case CompositionId::EX_F: return "EX_F";
        case CompositionId::EX_G: return "EX_G";
    }
    return "?";
}

/// One checked identity instance. lhs is the composite evaluated by chaining
/// library operations, rhs_closed_form the closed form; the two must agree or
/// the producing call throws. partner_pipeline is the other composite of the
/// commutation pair, and commutes_with_partner records whether lhs matches it.
struct CommutationReport {
    CompositionId id;
    Integer m;
    std::int64_t c;
    FgAbGroup D;
    FgAbGroup lhs;
    FgAbGroup rhs_closed_form;
    FgAbGroup partner_pipeline;
    bool commutes_with_partner;
};

namespace detail {

// Shared shape of all ten closed forms: an optional Z_m^(b_n) head plus one
// Z_{gcd(n_i,m)} block per invariant factor of D, with multiplicities given by
// consecutive differences of b at chain positions. offset_by_free_rank selects
// whether positions count D's free rank (b_{n+i} vs b_i). Compressed entries
// telescope: a factor with multiplicity mu spanning positions (q, q+mu] gets
// b(q+mu) - b(q) copies.
inline FgAbGroup gcd_chain_form(const FgAbGroup& d, const Integer& m,
                                MultiplierParams& params, bool offset_by_free_rank,
                                bool with_free_head) {
    Integer pos = offset_by_free_rank ? d.free_rank() : Integer(0);
    std::vector<FgAbGroup::TorsionEntry> parts;
    if (with_free_head) parts.emplace_back(m, params.b(d.free_rank()));
    for (const auto& [factor, mult] : d.torsion()) {
        const Integer lo = params.b(pos);
        pos += mult;
        parts.emplace_back(gcd(factor, m), params.b(pos) - lo);
    }
    return FgAbGroup::from_summands(0, parts);
}

}  // namespace detail

/// The stated closed form of a composite functor value at (m, c, D).
inline FgAbGroup closed_form(CompositionId id, const Integer& m, std::int64_t c,
                             const FgAbGroup& d) {
    if (m < 2) throw std::invalid_argument("closed_form: m must be >= 2");
    MultiplierParams params(c);
    switch (id) {
        case CompositionId::T34_I:
        case CompositionId::T34_II:
        case CompositionId::T36_IV:
        case CompositionId::T36_V:
            // Z_m^(b_n) + sum_i Z_{(n_i,m)}^(b_{n+i}-b_{n+i-1})
            return detail::gcd_chain_form(d, m, params, true, true);
        case CompositionId::T34_IV:
        case CompositionId::T34_VI:
        case CompositionId::T36_II:
            // sum_{i>=1} Z_{(n_i,m)}^(b_{n+i}-b_{n+i-1})
            return detail::gcd_chain_form(d, m, params, true, false);
        case CompositionId::T34_III:
        case CompositionId::T34_V:
        case CompositionId::T36_I:
            // sum_{i>=2} Z_{(n_i,m)}^(b_i-b_{i-1}); the i=1 term is written
            // out too but vanishes since b_1 = b_0 = 0
            return detail::gcd_chain_form(d, m, params, false, false);
        default:
            throw std::invalid_argument("closed_form: no closed form for " + to_string(id));
    }
}

/// The same composite evaluated by literally chaining homalg and multiplier
/// operations; the independent path of the oracle pair.
inline FgAbGroup pipeline(CompositionId id, const Integer& m, std::int64_t c,
                          const FgAbGroup& d) {
    if (m < 2) throw std::invalid_argument("pipeline: m must be >= 2");
    const FgAbGroup zm = FgAbGroup::cyclic(m);
    switch (id) {
        case CompositionId::T34_I: return nilpotent_multiplier(ext1(zm, d), c);
        case CompositionId::T34_II: return ext1(zm, nilpotent_multiplier(d, c));
        case CompositionId::T34_III: return nilpotent_multiplier(ext1(d, zm), c);
        case CompositionId::T34_IV: return ext1(nilpotent_multiplier(d, c), zm);
        case CompositionId::T34_V: return nilpotent_multiplier(tor1(zm, d), c);
        case CompositionId::T34_VI: return tor1(zm, nilpotent_multiplier(d, c));
        case CompositionId::T36_I: return nilpotent_multiplier(hom(zm, d), c);
        case CompositionId::T36_II: return hom(zm, nilpotent_multiplier(d, c));
        case CompositionId::T36_IV: return nilpotent_multiplier(hom(d, zm), c);
        case CompositionId::T36_V: return nilpotent_multiplier(tensor(zm, d), c);
        default:
            throw std::invalid_argument("pipeline: no composite for " + to_string(id));
    }
}

namespace detail {

/// The commutation partner's composite. For the T34/T36_I..II ids this is the
/// paired id's pipeline; T36_IV and T36_V carry their partner inline.
inline FgAbGroup partner_pipeline(CompositionId id, const Integer& m, std::int64_t c,
                                  const FgAbGroup& d) {
    const FgAbGroup zm = FgAbGroup::cyclic(m);
    switch (id) {
        case CompositionId::T34_I: return pipeline(CompositionId::T34_II, m, c, d);
        case CompositionId::T34_II: return pipeline(CompositionId::T34_I, m, c, d);
        case CompositionId::T34_III: return pipeline(CompositionId::T34_IV, m, c, d);
        case CompositionId::T34_IV: return pipeline(CompositionId::T34_III, m, c, d);
        case CompositionId::T34_V: return pipeline(CompositionId::T34_VI, m, c, d);
        case CompositionId::T34_VI: return pipeline(CompositionId::T34_V, m, c, d);
        case CompositionId::T36_I: return pipeline(CompositionId::T36_II, m, c, d);
        case CompositionId::T36_II: return pipeline(CompositionId::T36_I, m, c, d);
        case CompositionId::T36_IV: return hom(nilpotent_multiplier(d, c), zm);
        case CompositionId::T36_V: return tensor(zm, nilpotent_multiplier(d, c));
        default:
            throw std::invalid_argument("partner_pipeline: no partner for " + to_string(id));
    }
}

/// Pairs that commute unconditionally: Ext1(Z_m,-) against NcM, and the
/// T36_IV/T36_V identities. The remaining pairs commute when D is finite;
/// for infinite D non-commutation is existential, not universal.
inline bool always_commutes(CompositionId id) {
    switch (id) {
        case CompositionId::T34_I:
        case CompositionId::T34_II:
        case CompositionId::T36_IV:
        case CompositionId::T36_V: return true;
        default: return false;
    }
}

}  // namespace detail

/// Evaluates all ten identities at (m, c, D). Each report's composite is
/// computed both ways (closed form and chained pipeline) and the two must be
/// isomorphic; a mismatch throws verification_error, as does a violated
/// unconditional (or finite-D) commutation prediction.
inline std::vector<CommutationReport> check_commutation(const Integer& m, std::int64_t c,
                                                        const FgAbGroup& d) {
    std::vector<CommutationReport> out;
    out.reserve(theorem_ids().size());
    for (CompositionId id : theorem_ids()) {
        CommutationReport rep;
        rep.id = id;
        rep.m = m;
        rep.c = c;
        rep.D = d;
        rep.lhs = pipeline(id, m, c, d);
        rep.rhs_closed_form = closed_form(id, m, c, d);
        if (rep.lhs != rep.rhs_closed_form)
            throw verification_error("closed form disagrees with pipeline for " +
                                     to_string(id) + " at m=" + m.str() +
                                     ", c=" + std::to_string(c) + ", D=" + to_string(d) +
                                     ": " + to_string(rep.rhs_closed_form) + " vs " +
                                     to_string(rep.lhs));
        rep.partner_pipeline = detail::partner_pipeline(id, m, c, d);
        rep.commutes_with_partner = rep.lhs == rep.partner_pipeline;
        if (!rep.commutes_with_partner && (detail::always_commutes(id) || d.is_finite()))
            throw verification_error("predicted commutation fails for " + to_string(id) +
                                     " at m=" + m.str() + ", c=" + std::to_string(c) +
                                     ", D=" + to_string(d));
        out.push_back(std::move(rep));
    }
    return out;
}

/// The counterexample suite (a)-(g): functors with a fixed non-cyclic group in
/// one slot do not commute with the multiplier. (a)-(e) are parametrized by
/// n >= 2, (f) and (g) use fixed groups. Every report's stated value and
/// non-isomorphism is asserted; violations throw verification_error.
inline std::vector<CommutationReport> counterexample_suite(const Integer& n,
                                                           std::int64_t c) {
    if (n < 2) throw std::invalid_argument("counterexample_suite: n must be >= 2");
    MultiplierParams params(c);
    const Integer b2 = params.b(2);

    const FgAbGroup zn = FgAbGroup::cyclic(n);
    const FgAbGroup a = direct_sum(zn, zn);  // the non-cyclic slot group

    auto expect = [&](const Integer& base) {
        return FgAbGroup::from_summands(0, {{base, b2}});
    };
    auto nc = [&](const FgAbGroup& g) { return nilpotent_multiplier(g, c); };

    struct Case {
        CompositionId id;
        FgAbGroup d;  // the slot the multiplier is pushed through
        FgAbGroup lhs;
        FgAbGroup partner;
        FgAbGroup expected_lhs;
    };
    const FgAbGroup z14_z2 = from_cyclic_orders({14, 2});
    const FgAbGroup z6_z3 = from_cyclic_orders({6, 3});
    const FgAbGroup z6_z2 = from_cyclic_orders({6, 2});
    const FgAbGroup z9_z3 = from_cyclic_orders({9, 3});
    const std::vector<Case> cases = {
        {CompositionId::EX_A, zn, nc(ext1(a, zn)), ext1(a, nc(zn)), expect(n)},
        {CompositionId::EX_B, zn, nc(ext1(zn, a)), ext1(nc(zn), a), expect(n)},
        {CompositionId::EX_C, zn, nc(tor1(a, zn)), tor1(a, nc(zn)), expect(n)},
        {CompositionId::EX_D, zn, nc(tensor(a, zn)), tensor(a, nc(zn)), expect(n)},
        {CompositionId::EX_E, zn, nc(hom(a, zn)), hom(a, nc(zn)), expect(n)},
        {CompositionId::EX_F, z6_z3, nc(hom(z14_z2, z6_z3)), hom(z14_z2, nc(z6_z3)),
         expect(2)},
        {CompositionId::EX_G, z9_z3, nc(hom(z6_z2, z9_z3)), hom(nc(z6_z2), z9_z3),
         expect(3)},
    };

    std::vector<CommutationReport> out;
    out.reserve(cases.size());
    for (const auto& cs : cases) {
        if (cs.lhs != cs.expected_lhs)
            throw verification_error("counterexample " + to_string(cs.id) +
                                     " value mismatch: expected " +
                                     to_string(cs.expected_lhs) + ", got " +
                                     to_string(cs.lhs));
        if (cs.lhs == cs.partner)
            throw verification_error("counterexample " + to_string(cs.id) +
                                     " unexpectedly commutes at n=" + n.str() +
                                     ", c=" + std::to_string(c));
        out.push_back({cs.id, n, c, cs.d, cs.lhs, cs.expected_lhs, cs.partner, false});
    }
    return out;
}

/// The verification sweep domain: every canonical group with free rank <= 2
/// and at most 3 invariant factors drawn from divisibility chains topped by
/// n1 <= 12. Deterministic order.
inline std::vector<FgAbGroup> grid_groups(int max_free_rank = 2, int max_factors = 3,
                                          std::int64_t max_top = 12) {
    std::vector<std::vector<std::int64_t>> chains{{}};
    std::size_t first_of_prev = 0;
    for (int len = 1; len <= max_factors; ++len) {
        const std::size_t end = chains.size();
        for (std::size_t i = first_of_prev; i < end; ++i) {
            const std::int64_t top = chains[i].empty() ? max_top : chains[i].back();
            for (std::int64_t d = 2; d <= top; ++d) {
                if (!chains[i].empty() && chains[i].back() % d != 0) continue;
                auto extended = chains[i];
                extended.push_back(d);
                chains.push_back(std::move(extended));
            }
        }
        first_of_prev = end;
    }

    std::vector<FgAbGroup> out;
    out.reserve(static_cast<std::size_t>(max_free_rank + 1) * chains.size());
    for (int rank = 0; rank <= max_free_rank; ++rank)
        for (const auto& chain : chains) {
            std::vector<Integer> orders(static_cast<std::size_t>(rank), Integer(0));
            for (std::int64_t d : chain) orders.emplace_back(d);
            out.push_back(from_cyclic_orders(orders));
        }
    return out;
}

}  // namespace nilmult
