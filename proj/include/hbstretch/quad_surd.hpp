#pragma once

#include <ostream>
#include <string>

#include "hbstretch/errors.hpp"
#include "hbstretch/integer.hpp"
#include "hbstretch/interval.hpp"

namespace hbstretch {

/// Exact number (p + q*sqrt(D)) / r with D squarefree (or zero), r > 0 and
/// gcd(p, q, r) = 1. Two surds over the same radicand compare exactly; no
/// floating point is involved anywhere.
class QuadSurd {
public:
    QuadSurd() : p_(0), q_(0), d_(0), r_(1) {}

    /// Canonicalizing constructor: extracts square factors of D into q,
    /// reduces the common gcd, forces r > 0, and collapses q = 0 to D = 0.
    static QuadSurd make(Integer p, Integer q, Integer D, Integer r) {
        if (r == 0) throw InternalError("QuadSurd: zero denominator");
        if (D < 0) throw NegativeRadicandError("QuadSurd: negative radicand");
        if (r < 0) {
            r = -r;
            p = -p;
            q = -q;
        }
        if (q != 0 && D != 0) {
            auto [s, f] = extract_square_part(D);
            q *= s;
            D = f;
        }
        if (q == 0 || D == 0) {
            q = 0;
            D = 0;
        }
        if (D == 1) {  // sqrt(1) folds into the rational part
            p += q;
            q = 0;
            D = 0;
        }
        Integer g = gcd(gcd(abs(p), abs(q)), r);
        if (g > 1) {
            p /= g;
            q /= g;
            r /= g;
        }
        QuadSurd out;
        out.p_ = std::move(p);
        out.q_ = std::move(q);
        out.d_ = std::move(D);
        out.r_ = std::move(r);
        return out;
    }

    static QuadSurd from_integer(const Integer& n) {
        return make(n, 0, 0, 1);
    }
    static QuadSurd rational(const Integer& num, const Integer& den) {
        return make(num, 0, 0, den);
    }

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& D() const { return d_; }
    const Integer& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    QuadSurd operator-() const {
        QuadSurd out = *this;
        out.p_ = -out.p_;
        out.q_ = -out.q_;
        return out;
    }

    friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
    }

    /// Exact sign of the value.
    int sign() const {
        if (q_ == 0) return hbstretch::sign(p_);
        if (p_ == 0) return hbstretch::sign(q_);
        int sp = hbstretch::sign(p_), sq = hbstretch::sign(q_);
        if (sp == sq) return sp;
        // p and q*sqrt(D) pull in opposite directions: compare p^2 with q^2 D.
        Integer lhs = p_ * p_, rhs = q_ * q_ * d_;
        if (lhs == rhs) return 0;  // impossible for squarefree D>1, kept for D=0 safety
        return (lhs > rhs) ? sp : sq;
    }

    /// Certified enclosure of the value with absolute width at most
    /// 2^-precision_bits. The working precision grows with the magnitude
    /// until the target width is met.
    RealInterval to_interval(unsigned precision_bits) const {
        const Dyadic target = Dyadic::pow2(-static_cast<long>(precision_bits));
        for (unsigned bits =
                 precision_bits + bit_length(abs(q_)) + bit_length(r_) + 16;
             ; bits *= 2) {
            RealInterval root = is_rational()
                                    ? RealInterval(Dyadic())
                                    : interval_sqrt(RealInterval(d_), bits);
            RealInterval num = RealInterval(p_) + RealInterval(q_) * root;
            RealInterval out = interval_div(num, RealInterval(r_), bits);
            if (out.width() <= target) return out;
        }
    }

    std::string to_string() const {
        std::string s = "(" + p_.str();
        if (q_ != 0) {
            s += (q_ > 0 ? " + " : " - ") + abs(q_).str() + "*sqrt(" + d_.str() + ")";
        }
        s += ")/" + r_.str();
        return s;
    }

private:
    Integer p_, q_, d_, r_;
};

inline bool same_field(const QuadSurd& a, const QuadSurd& b) {
    return a.D() == b.D() || a.is_rational() || b.is_rational();
}

namespace detail {
inline const Integer& field_of(const QuadSurd& a, const QuadSurd& b) {
    return a.is_rational() ? b.D() : a.D();
}
}  // namespace detail

/// a + b within one quadratic field.
inline QuadSurd surd_add(const QuadSurd& a, const QuadSurd& b) {
    if (!same_field(a, b))
        throw IncomparableFieldsError("surd_add: distinct radicands " +
                                      a.D().str() + " vs " + b.D().str());
    const Integer& D = detail::field_of(a, b);
    return QuadSurd::make(a.p() * b.r() + b.p() * a.r(),
                          a.q() * b.r() + b.q() * a.r(), D, a.r() * b.r());
}

inline QuadSurd surd_sub(const QuadSurd& a, const QuadSurd& b) {
    return surd_add(a, -b);
}

inline QuadSurd surd_mul(const QuadSurd& a, const QuadSurd& b) {
    if (!same_field(a, b))
        throw IncomparableFieldsError("surd_mul: distinct radicands " +
                                      a.D().str() + " vs " + b.D().str());
    const Integer& D = detail::field_of(a, b);
    return QuadSurd::make(a.p() * b.p() + a.q() * b.q() * D,
                          a.p() * b.q() + a.q() * b.p(), D, a.r() * b.r());
}

/// 1/a for a != 0: rationalize by the conjugate.
inline QuadSurd surd_inverse(const QuadSurd& a) {
    if (a.is_zero()) throw InternalError("surd_inverse: zero");
    Integer norm = a.p() * a.p() - a.q() * a.q() * a.D();
    // r * (p - q sqrt(D)) / (p^2 - q^2 D)
    return QuadSurd::make(a.r() * a.p(), -a.r() * a.q(), a.D(), norm);
}

inline QuadSurd surd_div(const QuadSurd& a, const QuadSurd& b) {
    return surd_mul(a, surd_inverse(b));
}

/// Exact three-way comparison within one quadratic field (or against a
/// rational). Throws IncomparableFieldsError for mixed nonzero radicands —
/// callers needing a cross-field ordering drop to interval refinement.
inline int surd_compare(const QuadSurd& a, const QuadSurd& b) {
    if (!same_field(a, b))
        throw IncomparableFieldsError("surd_compare: distinct radicands " +
                                      a.D().str() + " vs " + b.D().str());
    return surd_sub(a, b).sign();
}

/// Certified ordering of two surds from arbitrary fields. Exact when the
/// fields allow it; otherwise adaptive interval refinement, doubling the
/// working precision up to `max_bits`. Distinct quadratic irrationals always
/// separate; equality across distinct squarefree radicands is impossible, so
/// the exactness check up front is complete.
inline int surd_compare_certified(const QuadSurd& a, const QuadSurd& b,
                                  unsigned start_bits = 128,
                                  unsigned max_bits = 4096) {
    if (same_field(a, b)) return surd_compare(a, b);
    if (a == b) return 0;
    for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
        RealInterval ia = a.to_interval(bits), ib = b.to_interval(bits);
        if (ia.certainly_less(ib)) return -1;
        if (ia.certainly_greater(ib)) return 1;
    }
    throw PrecisionExhaustedError("surd_compare_certified: " + a.to_string() +
                                  " vs " + b.to_string());
}

inline std::ostream& operator<<(std::ostream& os, const QuadSurd& s) {
    return os << s.to_string();
}

}  // namespace hbstretch
