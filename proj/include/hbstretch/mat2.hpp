#pragma once

#include <array>
#include <ostream>
#include <string>

#include "hbstretch/errors.hpp"
#include "hbstretch/integer.hpp"
#include "hbstretch/quad_surd.hpp"

namespace hbstretch {

/// 2x2 integer matrix (a b; c d). Entries are arbitrary precision, so powers
/// and long products never overflow.
struct Mat2 {
    Integer a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(Integer a_, Integer b_, Integer c_, Integer d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return Mat2(); }
    /// The two parabolic generators R = (1 1; 0 1) and L = (1 0; 1 1).
    static Mat2 gen_upper() { return Mat2(1, 1, 0, 1); }
    static Mat2 gen_lower() { return Mat2(1, 0, 1, 1); }
    /// The swap (0 1; 1 0), determinant -1.
    static Mat2 gen_swap() { return Mat2(0, 1, 1, 0); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
    Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const Mat2& x, const Mat2& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }

    /// A^m for m >= 0 by binary exponentiation.
    Mat2 pow(const Integer& m) const {
        if (m < 0) throw InternalError("Mat2::pow: negative exponent");
        Mat2 base = *this, acc = identity();
        Integer e = m;
        while (e > 0) {
            if ((e & 1) != 0) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Inverse for determinant +-1 matrices (adjugate over the determinant).
    Mat2 inverse() const {
        Integer det = a * d - b * c;
        if (det == 1) return Mat2(d, -b, -c, a);
        if (det == -1) return Mat2(-d, b, c, -a);
        throw InvalidMatrixError("inverse: determinant " + det.str());
    }

    bool nonnegative() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

    std::string to_string() const {
        return a.str() + "," + b.str() + ";" + c.str() + "," + d.str();
    }
};

inline Integer det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
inline Integer trace(const Mat2& m) { return m.a + m.d; }
/// Anti-trace: the sum of the anti-diagonal entries, b + c.
inline Integer anti_trace(const Mat2& m) { return m.b + m.c; }

inline Mat2 conjugate(const Mat2& m, const Mat2& by) {
    return by * m * by.inverse();
}

/// The five-way classification of GL2(Z) elements acting on the hyperbolic
/// plane. +-I and finite-order rotations all land in Elliptic.
enum class IsometryType {
    Elliptic,
    Parabolic,
    Hyperbolic,
    Reflection,
    GlideReflection,
};

inline const char* to_string(IsometryType t) {
    switch (t) {
        case IsometryType::Elliptic: return "elliptic";
        case IsometryType::Parabolic: return "parabolic";
        case IsometryType::Hyperbolic: return "hyperbolic";
        case IsometryType::Reflection: return "reflection";
        case IsometryType::GlideReflection: return "glide_reflection";
    }
    return "?";
}

inline IsometryType classify(const Mat2& m) {
    Integer dt = det(m);
    Integer tr = trace(m);
    if (dt == 1) {
        Integer at = abs(tr);
        if (at > 2) return IsometryType::Hyperbolic;
        if (at < 2) return IsometryType::Elliptic;
        bool is_pm_identity = (m == Mat2::identity() || m == -Mat2::identity());
        return is_pm_identity ? IsometryType::Elliptic : IsometryType::Parabolic;
    }
    if (dt == -1) {
        return tr == 0 ? IsometryType::Reflection : IsometryType::GlideReflection;
    }
    throw InvalidMatrixError("classify: determinant " + dt.str() +
                             " is not +-1");
}

/// Fully irreducible as an outer automorphism of F2: exactly the hyperbolic
/// elements and glide reflections.
inline bool is_fully_irreducible(const Mat2& m) {
    IsometryType t = classify(m);
    return t == IsometryType::Hyperbolic || t == IsometryType::GlideReflection;
}

/// Stretch factor of a fully irreducible element: the dominant eigenvalue
/// modulus. Hyperbolic, trace t: (|t| + sqrt(t^2-4))/2, from mu + 1/mu = |t|.
/// Glide, trace t: (|t| + sqrt(t^2+4))/2, from mu - 1/mu = |t|.
inline QuadSurd mu_stretch(const Mat2& m) {
    IsometryType t = classify(m);
    Integer at = abs(trace(m));
    if (t == IsometryType::Hyperbolic)
        return QuadSurd::make(at, 1, at * at - 4, 2);
    if (t == IsometryType::GlideReflection)
        return QuadSurd::make(at, 1, at * at + 4, 2);
    throw NotFullyIrreducibleError("mu_stretch: matrix is " +
                                   std::string(to_string(t)));
}

/// Parses the CLI matrix format "a,b;c,d": signed decimal integers,
/// optional spaces around separators; anything else is rejected.
inline Mat2 parse_mat2(const std::string& text) {
    std::array<Integer, 4> vals;
    std::size_t pos = 0, idx = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto parse_int = [&]() -> Integer {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
            throw InvalidMatrixError("parse: expected digit at offset " +
                                     std::to_string(pos) + " in \"" + text + "\"");
        Integer v = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        skip_ws();
        return neg ? -v : v;
    };
    for (idx = 0; idx < 4; ++idx) {
        vals[idx] = parse_int();
        if (idx == 3) break;
        char sep = (idx == 1) ? ';' : ',';
        if (pos >= text.size() || text[pos] != sep)
            throw InvalidMatrixError(std::string("parse: expected '") + sep +
                                     "' at offset " + std::to_string(pos) +
                                     " in \"" + text + "\"");
        ++pos;
    }
    if (pos != text.size())
        throw InvalidMatrixError("parse: trailing characters in \"" + text + "\"");
    return Mat2(vals[0], vals[1], vals[2], vals[3]);
}

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << m.to_string();
}

}  // namespace hbstretch
