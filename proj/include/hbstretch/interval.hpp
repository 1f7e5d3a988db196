#pragma once

#include <algorithm>
#include <ostream>

#include "hbstretch/dyadic.hpp"
#include "hbstretch/errors.hpp"

namespace hbstretch {

/// Closed interval [lower, upper] with dyadic endpoints. Every operation
/// returns an enclosure: the true value of the operation applied to any points
/// of the inputs lies inside the output.
class RealInterval {
public:
    RealInterval() = default;
    RealInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw InternalError("interval endpoints out of order");
    }
    explicit RealInterval(const Dyadic& point) : lo_(point), hi_(point) {}
    explicit RealInterval(const Integer& point)
        : lo_(Dyadic(point)), hi_(Dyadic(point)) {}

    const Dyadic& lower() const { return lo_; }
    const Dyadic& upper() const { return hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic midpoint() const { return (lo_ + hi_).half(); }
    bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RealInterval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }
    bool intersects(const RealInterval& other) const {
        return !(hi_ < other.lo_ || other.hi_ < lo_);
    }
    bool is_point() const { return lo_ == hi_; }

    /// Strictly below / above, i.e. certified ordering of the enclosed values.
    bool certainly_less(const RealInterval& other) const { return hi_ < other.lo_; }
    bool certainly_greater(const RealInterval& other) const { return lo_ > other.hi_; }

    RealInterval operator-() const { return RealInterval(-hi_, -lo_); }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        return RealInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        return RealInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        Dyadic p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
        Dyadic p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return RealInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
    }

    /// Re-enclose with endpoints of at most `bits` mantissa bits; contains
    /// the original.
    RealInterval round_out(unsigned bits) const {
        return RealInterval(lo_.round_down(bits), hi_.round_up(bits));
    }

private:
    Dyadic lo_, hi_;
};

inline std::ostream& operator<<(std::ostream& os, const RealInterval& iv) {
    return os << "[" << iv.lower().to_decimal(20, true) << ", "
              << iv.upper().to_decimal(20, false) << "]";
}

/// Enclosure of sqrt over the interval. Requires upper >= 0 (negative lower
/// bound is clamped: the true value can only lie in the nonnegative part).
inline RealInterval interval_sqrt(const RealInterval& x, unsigned precision_bits) {
    if (x.upper().sign() < 0)
        throw NegativeRadicandError("interval_sqrt: interval entirely negative");
    Dyadic lo = x.lower().sign() < 0 ? Dyadic() : x.lower();
    return RealInterval(sqrt_down(lo, precision_bits + 2),
                        sqrt_up(x.upper(), precision_bits + 2));
}

/// Enclosure of a/b for an interval b bounded away from zero.
inline RealInterval interval_div(const RealInterval& a, const RealInterval& b,
                                 unsigned precision_bits) {
    if (b.contains(Dyadic()))
        throw InternalError("interval_div: denominator interval contains zero");
    unsigned bits = precision_bits + 2;
    Dyadic q1 = div_down(a.lower(), b.lower(), bits);
    Dyadic q2 = div_down(a.lower(), b.upper(), bits);
    Dyadic q3 = div_down(a.upper(), b.lower(), bits);
    Dyadic q4 = div_down(a.upper(), b.upper(), bits);
    Dyadic r1 = div_up(a.lower(), b.lower(), bits);
    Dyadic r2 = div_up(a.lower(), b.upper(), bits);
    Dyadic r3 = div_up(a.upper(), b.lower(), bits);
    Dyadic r4 = div_up(a.upper(), b.upper(), bits);
    return RealInterval(std::min({q1, q2, q3, q4}), std::max({r1, r2, r3, r4}));
}

/// Enclosure of exp(x) for a dyadic argument. Argument reduction by repeated
/// halving, then the Taylor series with an explicit tail bound.
inline RealInterval exp_enclosure(const Dyadic& x, unsigned precision_bits) {
    if (x.sign() < 0) {
        RealInterval pos = exp_enclosure(-x, precision_bits + 8);
        return interval_div(RealInterval(Dyadic(Integer(1))), pos, precision_bits);
    }
    // Halve until y <= 1/2, remembering how many squarings to undo.
    unsigned halvings = 0;
    Dyadic y = x;
    const Dyadic half = Dyadic(Integer(1), -1);
    while (y > half) {
        y = y.half();
        ++halvings;
    }
    unsigned work = precision_bits + 4 * halvings + 32;

    // Taylor terms t_n = y^n / n! as nested enclosures.
    RealInterval sum{Dyadic(Integer(1))};
    RealInterval term{Dyadic(Integer(1))};
    RealInterval yiv{y};
    unsigned n = 0;
    while (true) {
        ++n;
        RealInterval numer = term * yiv;
        term = RealInterval(div_down(numer.lower(), Dyadic(Integer(n)), work),
                            div_up(numer.upper(), Dyadic(Integer(n)), work));
        sum = sum + term;
        // Tail for y <= 1/2: remaining terms < 2 * t_n * y < t_n.
        if (term.upper() <= Dyadic(Integer(1), -static_cast<long>(work))) {
            sum = RealInterval(sum.lower(), sum.upper() + term.upper());
            break;
        }
        if (n > 10 * work)
            throw PrecisionExhaustedError("exp_enclosure: series did not settle");
    }
    for (unsigned i = 0; i < halvings; ++i) {
        sum = (sum * sum).round_out(work);
    }
    return sum.round_out(precision_bits + 8);
}

}  // namespace hbstretch
