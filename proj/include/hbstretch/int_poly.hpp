#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "hbstretch/dyadic.hpp"
#include "hbstretch/errors.hpp"
#include "hbstretch/integer.hpp"

namespace hbstretch {

/// Univariate polynomial over the integers, constant coefficient first.
/// The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Integer v) { return IntPoly({std::move(v)}); }
    /// x^k with unit coefficient.
    static IntPoly monomial(std::size_t k, Integer v = Integer(1)) {
        std::vector<Integer> c(k + 1, Integer(0));
        c[k] = std::move(v);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Integer(0);
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) {
        return a.c_ == b.c_;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const {
        std::vector<Integer> c(c_);
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const Integer& k, const IntPoly& a) {
        std::vector<Integer> c(a.c_);
        for (auto& v : c) v *= k;
        return IntPoly(std::move(c));
    }

    Integer eval(const Integer& x) const {
        Integer acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Exact evaluation at a dyadic point (dyadics form a ring, so Horner
    /// introduces no rounding at all).
    Dyadic eval(const Dyadic& x) const {
        Dyadic acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Dyadic(c_[i]);
        return acc;
    }

    int sign_at(const Dyadic& x) const { return eval(x).sign(); }

    /// Divide out a known integer root: returns q with (x - root) * q = *this.
    IntPoly deflate_root(const Integer& root) const {
        if (is_zero()) return IntPoly();
        std::vector<Integer> q(c_.size() - 1, Integer(0));
        Integer carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + carry * root;
        }
        if (carry != 0)
            throw InternalError("deflate_root: " + root.str() + " is not a root");
        return IntPoly(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0) ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            Integer a = abs(c_[i]);
            if (i == 0) {
                s += a.str();
            } else {
                if (a != 1) s += a.str() + "*";
                s += (i == 1) ? "x" : "x^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.to_string();
}

/// 2x2 matrix with polynomial entries; carries the word matrices
/// W_x = A_x^{m1} B_x^{m2} ... whose determinant is identically 1.
struct PolyMat2 {
    IntPoly a, b, c, d;

    static PolyMat2 identity() {
        return {IntPoly::constant(1), IntPoly(), IntPoly(), IntPoly::constant(1)};
    }
    /// A_x^m = (1  m*x; 0  1)
    static PolyMat2 upper_power(const Integer& m) {
        return {IntPoly::constant(1), IntPoly::monomial(1, m), IntPoly(),
                IntPoly::constant(1)};
    }
    /// B_x^m = (1  0; m*x  1)
    static PolyMat2 lower_power(const Integer& m) {
        return {IntPoly::constant(1), IntPoly(), IntPoly::monomial(1, m),
                IntPoly::constant(1)};
    }

    friend PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const PolyMat2& x, const PolyMat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    IntPoly trace() const { return a + d; }
    IntPoly anti_trace() const { return b + c; }
    IntPoly det() const { return a * d - b * c; }
};

}  // namespace hbstretch
