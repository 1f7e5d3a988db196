#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "hbstretch/integer.hpp"

namespace hbstretch {

/// Dyadic rational m * 2^e with arbitrary-precision mantissa.
/// Addition, subtraction and multiplication are exact ring operations;
/// only division and root extraction ever round, and those always round in a
/// stated direction. This is what makes interval endpoints trustworthy.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(Integer m, long e) : mant_(std::move(m)), exp_(e) { normalize(); }
    explicit Dyadic(const Integer& n) : mant_(n), exp_(0) { normalize(); }
    explicit Dyadic(long n) : mant_(n), exp_(0) { normalize(); }

    const Integer& mantissa() const { return mant_; }
    long exponent() const { return exp_; }
    bool is_zero() const { return mant_ == 0; }
    int sign() const { return mant_.sign(); }

    Dyadic operator-() const { return Dyadic(-mant_, exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long e = std::min(a.exp_, b.exp_);
        return Dyadic((a.mant_ << static_cast<unsigned>(a.exp_ - e)) +
                          (b.mant_ << static_cast<unsigned>(b.exp_ - e)),
                      e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.mant_ == b.mant_ && a.exp_ == b.exp_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        int c = (a - b).sign();
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Largest dyadic with at most `bits` mantissa bits that is <= *this.
    Dyadic round_down(unsigned bits) const {
        unsigned len = bit_length(mant_);
        if (len <= bits) return *this;
        unsigned drop = len - bits;
        return Dyadic(floor_div_pow2(mant_, drop), exp_ + static_cast<long>(drop));
    }
    /// Smallest dyadic with at most `bits` mantissa bits that is >= *this.
    Dyadic round_up(unsigned bits) const {
        unsigned len = bit_length(mant_);
        if (len <= bits) return *this;
        unsigned drop = len - bits;
        return Dyadic(ceil_div_pow2(mant_, drop), exp_ + static_cast<long>(drop));
    }

    /// Exact halving (dyadics are closed under division by 2).
    Dyadic half() const { return Dyadic(mant_, exp_ - 1); }

    static Dyadic pow2(long e) { return Dyadic(Integer(1), e); }

    /// Decimal rendering with `digits` places after the point, rounded toward
    /// -inf (round_to_minus_inf) or +inf. Output is locale-free and
    /// deterministic, suitable for golden files.
    std::string to_decimal(unsigned digits, bool round_to_minus_inf) const {
        Integer scaled_num = mant_;
        // value * 10^digits = mant * 10^digits * 2^exp
        Integer pow10 = 1;
        for (unsigned i = 0; i < digits; ++i) pow10 *= 10;
        scaled_num *= pow10;
        Integer units;
        if (exp_ >= 0) {
            units = scaled_num << static_cast<unsigned>(exp_);
        } else {
            unsigned k = static_cast<unsigned>(-exp_);
            units = round_to_minus_inf ? floor_div_pow2(scaled_num, k)
                                       : ceil_div_pow2(scaled_num, k);
        }
        bool neg = units < 0;
        std::string body = abs(units).str();
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, digits ? "." : "");
        return (neg ? "-" : "") + body;
    }

private:
    void normalize() {
        if (mant_ == 0) {
            exp_ = 0;
            return;
        }
        Integer a = abs(mant_);
        unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(a));
        if (tz > 0) {
            mant_ >>= tz;
            exp_ += static_cast<long>(tz);
        }
    }

    Integer mant_;
    long exp_;
};

inline std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_decimal(20, true);
}

/// floor(a / b) as a dyadic with `bits` result precision; b != 0.
inline Dyadic div_down(const Dyadic& a, const Dyadic& b, unsigned bits) {
    if (a.is_zero()) return Dyadic();
    // a/b = (ma << bits)/mb * 2^(ea - eb - bits), floor'd with sign care.
    Integer num = a.mantissa() << bits;
    Integer q = floor_div(b.mantissa() > 0 ? num : -num, abs(b.mantissa()));
    return Dyadic(q, a.exponent() - b.exponent() - static_cast<long>(bits));
}

inline Dyadic div_up(const Dyadic& a, const Dyadic& b, unsigned bits) {
    return -div_down(-a, b, bits);
}

/// Largest dyadic s with s <= sqrt(a), carrying about `bits` fraction bits.
/// Requires a >= 0.
inline Dyadic sqrt_down(const Dyadic& a, unsigned bits) {
    if (a.is_zero()) return Dyadic();
    // Scale so the exponent is even and large: sqrt(m * 2^(2k)) = isqrt * 2^k.
    long e = a.exponent();
    long target = -2 * static_cast<long>(bits);
    long shift = e - target;
    Integer m = a.mantissa();
    if (shift >= 0) {
        m <<= static_cast<unsigned>(shift);
    } else {
        // Keep the enclosure valid: drop low bits, rounding down.
        m = floor_div_pow2(m, static_cast<unsigned>(-shift));
    }
    Integer s = isqrt(m);
    return Dyadic(s, target / 2);
}

/// Smallest dyadic s with s >= sqrt(a).
inline Dyadic sqrt_up(const Dyadic& a, unsigned bits) {
    if (a.is_zero()) return Dyadic();
    long e = a.exponent();
    long target = -2 * static_cast<long>(bits);
    long shift = e - target;
    Integer m = a.mantissa();
    if (shift >= 0) {
        m <<= static_cast<unsigned>(shift);
    } else {
        m = ceil_div_pow2(m, static_cast<unsigned>(-shift));
    }
    Integer s = isqrt(m);
    if (s * s < m) ++s;
    return Dyadic(s, target / 2);
}

}  // namespace hbstretch
