#pragma once

#include "nilmult/errors.hpp"
#include "nilmult/matrix.hpp"
#include "nilmult/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nilmult {

/// A finitely generated abelian group in canonical invariant-factor form:
/// Z^(free_rank) + Z_{n1}^(m1) + Z_{n2}^(m2) + ... with the factors strictly
/// decreasing and each divisible by its successor (n_{i+1} | n_i). Equal
/// invariant factors are merged into one entry's multiplicity, and both ranks
/// and multiplicities are unbounded, so Z_p^(b) stays O(1) in memory no matter
/// how large b gets. Two values are isomorphic iff they compare equal.
///
/// Values are immutable once built; every operation below is a pure function.
class FgAbGroup {
  public:
    /// (invariant factor, multiplicity); factor >= 2, multiplicity >= 1.
    using TorsionEntry = std::pair<Integer, Integer>;

    FgAbGroup() = default;  // the trivial group

    static FgAbGroup trivial() { return {}; }

    static FgAbGroup free_abelian(Integer rank) {
        return from_summands(std::move(rank), {});
    }

    /// cyclic(0) is Z, cyclic(1) is trivial, cyclic(d) is Z_d.
    static FgAbGroup cyclic(const Integer& order) {
        if (order < 0) throw std::invalid_argument("cyclic: order must be non-negative");
        if (order == 0) return free_abelian(1);
        return from_summands(0, {{order, 1}});
    }

    /// Canonicalizes an arbitrary bag of finite cyclic summands plus a free
    /// rank. This is the single normalization funnel every operation uses.
    static FgAbGroup from_summands(Integer free_rank,
                                   const std::vector<TorsionEntry>& summands);

    const Integer& free_rank() const { return free_rank_; }
    const std::vector<TorsionEntry>& torsion() const { return torsion_; }

    /// Number of invariant factors (the k of Z_{n1}+...+Z_{nk}).
    Integer torsion_rank() const {
        Integer k = 0;
        for (const auto& [factor, mult] : torsion_) k += mult;
        return k;
    }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_cyclic() const {
        if (is_trivial()) return true;
        if (free_rank_ == 0) return torsion_.size() == 1 && torsion_[0].second == 1;
        return free_rank_ == 1 && torsion_.empty();
    }

    /// nullopt means infinite.
    std::optional<Integer> order() const;
    /// Largest invariant factor (1 for the trivial group); nullopt if infinite.
    std::optional<Integer> exponent() const;

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

  private:
    Integer free_rank_ = 0;
    std::vector<TorsionEntry> torsion_;
};

inline FgAbGroup FgAbGroup::from_summands(Integer free_rank,
                                          const std::vector<TorsionEntry>& summands) {
    if (free_rank < 0)
        throw std::invalid_argument("FgAbGroup: free rank must be non-negative");

    // primary decomposition: prime -> (exponent, multiplicity), exponents descending
    std::map<Integer, std::map<unsigned, Integer, std::greater<>>> primary;
    for (const auto& [order, mult] : summands) {
        if (order <= 0)
            throw std::invalid_argument("FgAbGroup: cyclic order must be positive");
        if (mult < 0)
            throw std::invalid_argument("FgAbGroup: multiplicity must be non-negative");
        if (order == 1 || mult == 0) continue;
        for (const auto& [p, e] : factorize(order)) primary[p][e] += mult;
    }

    // Reassemble invariant factors in descending divisibility order. Think of
    // a rank axis: position r holds p^e where e is the exponent of the r-th
    // largest p-power summand (0 once p's summands are exhausted). Cutting the
    // axis at every tier boundary of every prime yields segments on which the
    // invariant factor is constant, so multiplicities never get expanded.
    struct Tier {
        unsigned exp;
        Integer upto;  // covers positions (previous upto, upto]
    };
    std::map<Integer, std::vector<Tier>> tiers;
    std::set<Integer> cuts;
    for (const auto& [p, by_exp] : primary) {
        Integer cum = 0;
        auto& tv = tiers[p];
        for (const auto& [e, m] : by_exp) {
            cum += m;
            tv.push_back({e, cum});
            cuts.insert(cum);
        }
    }

    FgAbGroup g;
    g.free_rank_ = std::move(free_rank);
    Integer lo = 0;
    for (const Integer& hi : cuts) {
        Integer factor = 1;
        for (const auto& [p, tv] : tiers)
            for (const auto& tier : tv)
                if (tier.upto > lo) {
                    factor *= pow(p, tier.exp);
                    break;
                }
        g.torsion_.emplace_back(std::move(factor), hi - lo);
        lo = hi;
    }
    return g;
}

inline std::optional<Integer> FgAbGroup::order() const {
    if (free_rank_ != 0) return std::nullopt;
    Integer total = 1;
    for (const auto& [factor, mult] : torsion_) {
        if (mult > std::numeric_limits<unsigned>::max())
            throw capacity_error("order: multiplicity too large to exponentiate");
        total *= pow(factor, mult.convert_to<unsigned>());
    }
    return total;
}

inline std::optional<Integer> FgAbGroup::exponent() const {
    if (free_rank_ != 0) return std::nullopt;
    if (torsion_.empty()) return Integer(1);
    return torsion_.front().first;
}

/// Direct sum of cyclic groups given by their orders; 0 denotes Z and order 1
/// summands are dropped. Negative entries are malformed.
inline FgAbGroup from_cyclic_orders(const std::vector<Integer>& orders) {
    Integer free = 0;
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (const Integer& d : orders) {
        if (d < 0)
            throw std::invalid_argument("from_cyclic_orders: orders must be non-negative");
        if (d == 0)
            ++free;
        else
            parts.emplace_back(d, 1);
    }
    return FgAbGroup::from_summands(free, parts);
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<FgAbGroup::TorsionEntry> parts;
    parts.reserve(a.torsion().size() + b.torsion().size());
    parts.insert(parts.end(), a.torsion().begin(), a.torsion().end());
    parts.insert(parts.end(), b.torsion().begin(), b.torsion().end());
    return FgAbGroup::from_summands(a.free_rank() + b.free_rank(), parts);
}

/// Canonical forms make isomorphism a field comparison.
inline bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

/// Multiplicity of each primary cyclic Z_{p^e}, keyed by (p, e).
inline std::map<std::pair<Integer, unsigned>, Integer>
primary_decomposition(const FgAbGroup& g) {
    std::map<std::pair<Integer, unsigned>, Integer> out;
    for (const auto& [factor, mult] : g.torsion())
        for (const auto& [p, e] : factorize(factor)) out[{p, e}] += mult;
    return out;
}

/// True iff A + C = B for some C. For finitely generated abelian groups this
/// holds exactly when the free rank and every primary multiplicity of A are
/// dominated by B's (Krull-Schmidt on cyclic indecomposables).
inline bool is_direct_summand(const FgAbGroup& a, const FgAbGroup& b) {
    if (a.free_rank() > b.free_rank()) return false;
    auto pa = primary_decomposition(a);
    auto pb = primary_decomposition(b);
    for (const auto& [pe, mult] : pa) {
        auto it = pb.find(pe);
        if (it == pb.end() || it->second < mult) return false;
    }
    return true;
}

/// Direct sum of copies of Z_p for one prime p (the trivial group counts).
inline bool is_elementary_abelian(const FgAbGroup& g, const Integer& p) {
    if (p < 2) throw std::invalid_argument("is_elementary_abelian: p must be >= 2");
    if (g.is_trivial()) return true;
    if (g.free_rank() != 0 || g.torsion().size() != 1) return false;
    return g.torsion()[0].first == p && is_prime(p);
}

/// Abelianized presentation: Z^cols modulo the row space of the relation
/// matrix, read off the Smith normal form diagonal.
inline FgAbGroup from_presentation(const IntMatrix& relations) {
    const SmithDecomposition snf = smith_normal_form(relations);
    const std::size_t dim = std::min(relations.rows(), relations.cols());
    std::size_t rank = 0;
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (std::size_t i = 0; i < dim; ++i) {
        const Integer& d = snf.S(i, i);
        if (d == 0) break;
        ++rank;
        if (d > 1) parts.emplace_back(d, 1);
    }
    return FgAbGroup::from_summands(Integer(relations.cols() - rank), parts);
}

/// Expanded list of cyclic summand orders (0 for each Z summand), largest
/// torsion factors first. Guarded because expansion defeats the compressed
/// representation; only oracle-scale groups should ever be expanded.
inline std::vector<Integer> cyclic_summands(const FgAbGroup& g, std::size_t cap = 64) {
    Integer total = g.free_rank() + g.torsion_rank();
    if (total > cap)
        throw capacity_error("cyclic_summands: group too large to expand");
    std::vector<Integer> out;
    for (Integer i = 0; i < g.free_rank(); ++i) out.emplace_back(0);
    for (const auto& [factor, mult] : g.torsion())
        for (Integer i = 0; i < mult; ++i) out.push_back(factor);
    return out;
}

/// Renders in the CLI expression syntax: "Z^2 + Z12 + Z2", trivial group "1".
inline std::string to_string(const FgAbGroup& g) {
    if (g.is_trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (g.free_rank() > 0) {
        sep();
        os << "Z";
        if (g.free_rank() != 1) os << "^" << g.free_rank();
    }
    for (const auto& [factor, mult] : g.torsion()) {
        sep();
        os << "Z" << factor;
        if (mult != 1) os << "^" << mult;
    }
    return os.str();
}

}  // namespace nilmult
