#pragma once

// Brute-force oracles shared by the unit and acceptance suites. Everything
// here works by exhaustive element enumeration on small finite groups and is
// deliberately independent of the library's gcd/closed-form paths: a finite
// abelian group is pinned down by its multiset of element orders, so two
// groups are compared through those multisets.

#include "nilmult/nilmult.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using nilmult::FgAbGroup;
using nilmult::Integer;

/// A finite abelian group presented concretely as Z_{d1} x ... x Z_{dk};
/// elements are mixed-radix tuples.
using Dims = std::vector<std::int64_t>;
using Tuple = std::vector<std::int64_t>;

inline Dims dims_of(const FgAbGroup& g) {
    Dims out;
    for (const Integer& d : cyclic_summands(g))
        out.push_back(d.convert_to<std::int64_t>());  // finite groups only
    return out;
}

inline std::vector<Tuple> all_elements(const Dims& dims) {
    std::vector<Tuple> out{Tuple(dims.size(), 0)};
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::vector<Tuple> next;
        next.reserve(out.size() * static_cast<std::size_t>(dims[i]));
        for (const Tuple& t : out)
            for (std::int64_t v = 0; v < dims[i]; ++v) {
                Tuple u = t;
                u[i] = v;
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

inline Tuple scale(const Dims& dims, const Tuple& t, std::int64_t k) {
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = (t[i] * k) % dims[i];
    return out;
}

inline Tuple add(const Dims& dims, const Tuple& a, const Tuple& b) {
    Tuple out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % dims[i];
    return out;
}

inline std::int64_t element_order(const Dims& dims, const Tuple& t) {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::int64_t o = dims[i] / std::gcd(dims[i], t[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

/// order -> number of elements of that order.
inline std::map<std::int64_t, std::int64_t> order_multiset(const Dims& dims) {
    std::map<std::int64_t, std::int64_t> out;
    for (const Tuple& t : all_elements(dims)) ++out[element_order(dims, t)];
    return out;
}

inline std::map<std::int64_t, std::int64_t> order_multiset(const FgAbGroup& g) {
    return order_multiset(dims_of(g));
}

/// The subgroup mB = {m*b : b in B} as an element set.
inline std::set<Tuple> multiples_subgroup(const Dims& dims, std::int64_t m) {
    std::set<Tuple> out;
    for (const Tuple& t : all_elements(dims)) out.insert(scale(dims, t, m));
    return out;
}

/// Element-order multiset of the quotient B/mB, computed on cosets: the order
/// of b + mB is the least t >= 1 with t*b in mB.
inline std::map<std::int64_t, std::int64_t> quotient_order_multiset(const Dims& dims,
                                                                    std::int64_t m) {
    const std::set<Tuple> sub = multiples_subgroup(dims, m);
    // one canonical representative per coset: the least element of b + mB
    std::set<Tuple> reps;
    for (const Tuple& t : all_elements(dims)) {
        Tuple least = t;
        for (const Tuple& s : sub) least = std::min(least, add(dims, t, s));
        reps.insert(least);
    }
    std::map<std::int64_t, std::int64_t> out;
    for (const Tuple& r : reps) {
        std::int64_t t = 1;
        while (sub.find(scale(dims, r, t)) == sub.end()) ++t;
        ++out[t];
    }
    return out;
}

/// Elements of the m-torsion subgroup B[m] = {b : m*b = 0}.
inline std::vector<Tuple> torsion_subgroup(const Dims& dims, std::int64_t m) {
    std::vector<Tuple> out;
    for (const Tuple& t : all_elements(dims)) {
        Tuple mt = scale(dims, t, m);
        if (std::all_of(mt.begin(), mt.end(), [](std::int64_t v) { return v == 0; }))
            out.push_back(t);
    }
    return out;
}

inline std::map<std::int64_t, std::int64_t>
torsion_order_multiset(const Dims& dims, std::int64_t m) {
    std::map<std::int64_t, std::int64_t> out;
    for (const Tuple& t : torsion_subgroup(dims, m)) ++out[element_order(dims, t)];
    return out;
}

/// All isomorphism classes of abelian groups of order n, via partitions of the
/// exponent of each prime.
inline std::vector<FgAbGroup> abelian_groups_of_order(std::int64_t n) {
    using nilmult::factorize;
    std::vector<std::vector<Integer>> summand_lists{{}};
    for (const auto& [p, e] : factorize(Integer(n))) {
        // partitions of e
        std::vector<std::vector<unsigned>> partitions;
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
            if (remaining == 0) {
                partitions.push_back(cur);
                return;
            }
            for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
                cur.push_back(part);
                self(self, remaining - part, part);
                cur.pop_back();
            }
        };
        rec(rec, e, e);

        std::vector<std::vector<Integer>> next;
        for (const auto& base : summand_lists)
            for (const auto& partition : partitions) {
                auto list = base;
                for (unsigned part : partition) list.push_back(pow(p, part));
                next.push_back(std::move(list));
            }
        summand_lists = std::move(next);
    }
    std::vector<FgAbGroup> out;
    out.reserve(summand_lists.size());
    for (const auto& list : summand_lists) out.push_back(nilmult::from_cyclic_orders(list));
    return out;
}

inline std::vector<FgAbGroup> abelian_groups_up_to(std::int64_t max_order) {
    std::vector<FgAbGroup> out;
    for (std::int64_t n = 1; n <= max_order; ++n)
        for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace oracle
