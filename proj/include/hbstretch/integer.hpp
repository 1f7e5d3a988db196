#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace hbstretch {

/// Arbitrary-precision signed integer. Every matrix entry, polynomial
/// coefficient and surd component in this library is an Integer; there is no
/// fixed-width overflow regime anywhere.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return boost::multiprecision::abs(a); }

inline int sign(const Integer& a) { return a.sign(); }

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
    return boost::multiprecision::sqrt(n);
}

/// floor(a / 2^k) — well-defined for negative a, unlike raw shifts.
inline Integer floor_div_pow2(const Integer& a, unsigned k) {
    if (k == 0) return a;
    if (a >= 0) return a >> k;
    Integer na = -a;
    return -((na + ((Integer(1) << k) - 1)) >> k);
}

/// ceil(a / 2^k).
inline Integer ceil_div_pow2(const Integer& a, unsigned k) {
    return -floor_div_pow2(-a, k);
}

/// floor(a / b) for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;  // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    return -floor_div(-a, b);
}

/// Number of bits in |a| (0 for a == 0).
inline unsigned bit_length(const Integer& a) {
    if (a == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(a >= 0 ? a : Integer(-a))) + 1;
}

namespace detail {

inline Integer pollard_rho(const Integer& n) {
    // Brent's cycle variant; n must be odd, composite, not a prime power
    // caught by the caller's trial division.
    Integer x = 2, y = 2, d = 1, c = 1;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
        ++c;  // rare: retry with a different polynomial offset
    }
}

inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Miller-Rabin with fixed bases; deterministic below 3.3e24, ample for
    // the radicand scales this library meets.
    Integer d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline void factor_into(Integer n, const Integer& trial_bound,
                        std::vector<Integer>& out) {
    if (n <= 1) return;
    for (Integer p = 2; p * p <= n && p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, trial_bound, out);
    factor_into(n / d, trial_bound, out);
}

}  // namespace detail

/// Splits n >= 0 as s^2 * f with f squarefree; returns {s, f}.
/// Trial division up to 10^6, Pollard rho beyond.
inline std::pair<Integer, Integer> extract_square_part(const Integer& n) {
    if (n == 0) return {1, 0};
    std::vector<Integer> primes;
    detail::factor_into(n, Integer(1000000), primes);
    Integer s = 1, f = 1;
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t count = j - i;
        for (std::size_t k = 0; k + 1 < count; k += 2) s *= primes[i];
        if (count % 2 == 1) f *= primes[i];
        i = j;
    }
    return {s, f};
}

}  // namespace hbstretch
