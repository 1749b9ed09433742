#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilmult {

// All group orders, ranks and multiplicities are unbounded: multiplicities of
// the form b_{n+k} grow polynomially of degree c+1 and orders p^{b_k} overflow
// any fixed width almost immediately.
using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::pow;

/// Deterministic Miller-Rabin. The fixed base set is exact for n < 3.3e24 and
/// overwhelmingly reliable beyond.
inline bool is_prime(const Integer& n) {
    static constexpr unsigned small_primes[] = {2,  3,  5,  7,  11, 13,
                                                17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : small_primes) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s && witness; ++i) {
            x = x * x % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

/// Brent-style Pollard rho. Returns a nontrivial factor of an odd composite n,
/// or n itself (caller retries with the next polynomial offset).
inline Integer pollard_brent(const Integer& n, unsigned offset) {
    const Integer c = offset;
    const std::int64_t batch = 128;
    Integer y = 2, g = 1, q = 1, x = 0, ys = 0;
    for (std::int64_t r = 1; g == 1; r *= 2) {
        x = y;
        for (std::int64_t i = 0; i < r; ++i) y = (y * y + c) % n;
        for (std::int64_t k = 0; k < r && g == 1; k += batch) {
            ys = y;
            const std::int64_t lim = std::min(batch, r - k);
            for (std::int64_t i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
        }
    }
    if (g == n) {
        // gcd batch overshot; backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

inline void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = n;
    for (unsigned c = 1; d == n; ++c) d = pollard_brent(n, c);
    factor_into(d, out);
    Integer rest = n / d;
    factor_into(rest, out);
}

}  // namespace detail

/// Prime factorization, primes ascending. factorize(1) is empty.
inline std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::map<Integer, unsigned> acc;
    for (unsigned p : {2u, 3u, 5u}) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    // 6k+-1 wheel for small factors, Pollard rho for whatever survives
    for (Integer p = 7; p <= 4096 && p * p <= n; p += 6) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
        const Integer q = p + 4;
        while (n % q == 0) {
            ++acc[q];
            n /= q;
        }
    }
    if (n > 1) {
        if (n < 4098 * 4098)
            ++acc[n];  // survived trial division, so prime
        else
            detail::factor_into(n, acc);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace nilmult
