#pragma once

#include "nilmult/errors.hpp"
#include "nilmult/fgab.hpp"
#include "nilmult/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nilmult {

/// A bracketing tree over the letters x1, x2, ...; the members of a Hall
/// basis. Immutable with shared subtrees, so enumeration stays cheap.
///
/// The Hall order used throughout is: first by weight, then lexicographically
/// by the rendered form ("[x2,x1]" etc.). An element [u,v] is basic iff u > v
/// and, when u = [a,b], additionally b <= v.
class BasicCommutator {
  public:
    static BasicCommutator leaf(int letter) {
        if (letter < 1) throw std::invalid_argument("BasicCommutator: letters start at 1");
        auto n = std::make_shared<Node>();
        n->letter = letter;
        n->weight = 1;
        n->repr = "x" + std::to_string(letter);
        return BasicCommutator(std::move(n));
    }

    static BasicCommutator bracket(const BasicCommutator& u, const BasicCommutator& v) {
        auto n = std::make_shared<Node>();
        n->left = u.node_;
        n->right = v.node_;
        n->weight = u.weight() + v.weight();
        n->repr = "[" + u.str() + "," + v.str() + "]";
        return BasicCommutator(std::move(n));
    }

    bool is_leaf() const { return node_->letter != 0; }
    int letter() const { return node_->letter; }
    BasicCommutator left() const { return BasicCommutator(node_->left); }
    BasicCommutator right() const { return BasicCommutator(node_->right); }
    int weight() const { return node_->weight; }
    const std::string& str() const { return node_->repr; }

    friend bool operator==(const BasicCommutator& a, const BasicCommutator& b) {
        return a.str() == b.str();  // the rendering determines the tree
    }
    friend bool operator<(const BasicCommutator& a, const BasicCommutator& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.str() < b.str();
    }

  private:
    struct Node {
        int letter = 0;  // > 0 for leaves
        std::shared_ptr<const Node> left, right;
        int weight = 0;
        std::string repr;
    };

    explicit BasicCommutator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

/// Moebius function.
inline int mobius(const Integer& d) {
    if (d < 1) throw std::invalid_argument("mobius: argument must be positive");
    int sign = 1;
    for (const auto& [p, e] : factorize(d)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// Witt's formula (1/w) * sum_{d|w} mu(d) * n^(w/d): the number of basic
/// commutators of weight w on n letters (letters may repeat and need not all
/// appear). This is the b_i table entry with w = c+1.
inline Integer witt_count(const Integer& letters, std::int64_t weight) {
    if (letters < 0) throw std::invalid_argument("witt_count: letters must be non-negative");
    if (weight < 1) throw std::invalid_argument("witt_count: weight must be >= 1");
    if (letters <= 1) return weight == 1 ? letters : Integer(0);

    // mu(d) vanishes off squarefree divisors, i.e. products of subsets of the
    // distinct primes of w
    std::vector<std::int64_t> primes;
    for (const auto& [p, e] : factorize(Integer(weight)))
        primes.push_back(p.convert_to<std::int64_t>());

    Integer total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
        std::int64_t d = 1;
        int sign = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t{1} << i)) {
                d *= primes[i];
                sign = -sign;
            }
        const std::int64_t e = weight / d;
        if (e > std::numeric_limits<unsigned>::max())
            throw capacity_error("witt_count: weight too large");
        if (sign > 0)
            total += pow(letters, static_cast<unsigned>(e));
        else
            total -= pow(letters, static_cast<unsigned>(e));
    }
    Integer q, r;
    boost::multiprecision::divide_qr(total, Integer(weight), q, r);
    if (r != 0) throw std::logic_error("witt_count: divisor sum not divisible by weight");
    return q;
}

/// The complete Hall basis of weight exactly w on the letters x1..xn, in Hall
/// order. Bounded hard: the basis grows like n^w / w.
inline std::vector<BasicCommutator> hall_basis(int letters, int weight) {
    if (letters < 0 || letters > 6 || weight < 1 || weight > 8)
        throw capacity_error(
            "hall_basis: supported range is 0 <= letters <= 6, 1 <= weight <= 8");

    std::vector<std::vector<BasicCommutator>> level(weight + 1);
    for (int i = 1; i <= letters; ++i) level[1].push_back(BasicCommutator::leaf(i));
    for (int w = 2; w <= weight; ++w) {
        auto& out = level[w];
        for (int wu = w - 1; 2 * wu >= w; --wu) {
            const int wv = w - wu;
            for (const auto& u : level[wu])
                for (const auto& v : level[wv]) {
                    if (!(v < u)) continue;                        // need u > v
                    if (!u.is_leaf() && v < u.right()) continue;   // need u.right <= v
                    out.push_back(BasicCommutator::bracket(u, v));
                }
        }
        std::sort(out.begin(), out.end());
    }
    return level[weight];
}

/// Multiset of leaf letters, e.g. [[x2,x1],x2] -> {1:1, 2:2}.
inline std::map<int, int> letter_multiset(const BasicCommutator& bc) {
    std::map<int, int> out;
    std::vector<BasicCommutator> stack{bc};
    while (!stack.empty()) {
        BasicCommutator cur = stack.back();
        stack.pop_back();
        if (cur.is_leaf()) {
            ++out[cur.letter()];
        } else {
            stack.push_back(cur.left());
            stack.push_back(cur.right());
        }
    }
    return out;
}

/// The pair (c, w = c+1) plus a memoized table of basic-commutator counts
/// b_j = witt_count(j, c+1). Intended to be created locally per computation;
/// the cache is not synchronized.
struct MultiplierParams {
    std::int64_t nil_class;  // the c of the variety N_c
    std::int64_t weight;     // commutator weight c + 1
    std::map<Integer, Integer> b_table;

    explicit MultiplierParams(std::int64_t c) : nil_class(c), weight(c + 1) {
        if (c < 1) throw std::invalid_argument("MultiplierParams: class must be >= 1");
    }

    const Integer& b(const Integer& letters) {
        auto it = b_table.find(letters);
        if (it == b_table.end())
            it = b_table.emplace(letters, witt_count(letters, weight)).first;
        return it->second;
    }
};

/// T(H1,...,Hn)_w: the direct sum, over every Hall-basis element of weight w
/// on n letters, of the tensor product of the cyclic groups its letter
/// multiset selects (with repetition). Cyclic groups are given by order, 0
/// standing for Z. This is the enumeration oracle the closed-form multiplier
/// is checked against.
inline FgAbGroup tensor_T(const std::vector<Integer>& cyclic_orders, std::int64_t weight) {
    if (cyclic_orders.size() > 6)
        throw capacity_error("tensor_T: at most 6 cyclic groups supported");
    if (weight < 1 || weight > 8)
        throw capacity_error("tensor_T: supported weights are 1..8");
    for (const Integer& f : cyclic_orders)
        if (f < 0)
            throw std::invalid_argument("tensor_T: orders must be 0 (for Z) or positive");

    Integer free = 0;
    std::vector<FgAbGroup::TorsionEntry> parts;
    for (const auto& bc :
         hall_basis(static_cast<int>(cyclic_orders.size()), static_cast<int>(weight))) {
        Integer g = 0;  // gcd of the finite orders involved; 0 while all are Z
        for (const auto& [letter, count] : letter_multiset(bc)) {
            const Integer& f = cyclic_orders[static_cast<std::size_t>(letter) - 1];
            if (f != 0) g = gcd(g, f);
        }
        if (g == 0)
            ++free;
        else if (g > 1)
            parts.emplace_back(g, 1);
    }
    return FgAbGroup::from_summands(free, parts);
}

}  // namespace nilmult
