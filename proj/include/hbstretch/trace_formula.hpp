#pragma once

#include <vector>

#include "hbstretch/int_poly.hpp"
#include "hbstretch/integer.hpp"
#include "hbstretch/mat2.hpp"

namespace hbstretch {

/// Exponent vector (m_1, ..., m_n) of an alternating word
/// A^{m1} B^{m2} A^{m3} ... — even length ends on a B-exponent, odd length on
/// a trailing A-exponent.
using ExponentVector = std::vector<Integer>;

/// All strictly increasing k-tuples (j_1 < ... < j_k) in [1, 2d] whose
/// consecutive differences are odd, in lexicographic order. These index the
/// monomials of the closed-form trace polynomial.
inline std::vector<std::vector<int>> index_set(int d, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    const int n = 2 * d;
    auto rec = [&](auto&& self, int depth, int prev) -> void {
        if (depth == k) {
            out.push_back(tuple);
            return;
        }
        int lo = (depth == 0) ? 1 : prev + 1;
        for (int j = lo; j <= n; ++j) {
            if (depth > 0 && (j - prev) % 2 == 0) continue;
            tuple[static_cast<std::size_t>(depth)] = j;
            self(self, depth + 1, j);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// c_d(k) = sum over J^k_d of m_{j1} * ... * m_{jk}.
inline Integer c_coeff(int d, int k, const ExponentVector& m) {
    Integer total = 0;
    for (const auto& tuple : index_set(d, k)) {
        Integer prod = 1;
        for (int j : tuple) prod *= m[static_cast<std::size_t>(j - 1)];
        total += prod;
    }
    return total;
}

/// Closed-form trace of the word matrix: 2 + sum_i c_d(2i) x^{2i}.
inline IntPoly trace_poly(const ExponentVector& m) {
    if (m.size() % 2 != 0)
        throw InternalError("trace_poly: exponent vector must have even length");
    int d = static_cast<int>(m.size()) / 2;
    std::vector<Integer> coeffs(m.size() + 1, Integer(0));
    coeffs[0] = 2;
    for (int i = 1; i <= d; ++i)
        coeffs[static_cast<std::size_t>(2 * i)] = c_coeff(d, 2 * i, m);
    return IntPoly(std::move(coeffs));
}

/// The direct product oracle W_x = A_x^{m1} B_x^{m2} ... over Z[x];
/// odd lengths carry the trailing A-factor.
inline PolyMat2 word_matrix_poly(const ExponentVector& m) {
    PolyMat2 acc = PolyMat2::identity();
    for (std::size_t i = 0; i < m.size(); ++i) {
        acc = acc * (i % 2 == 0 ? PolyMat2::upper_power(m[i])
                                : PolyMat2::lower_power(m[i]));
    }
    return acc;
}

/// Same word evaluated at x = 1, as an integer matrix.
inline Mat2 word_matrix(const ExponentVector& m) {
    Mat2 acc = Mat2::identity();
    for (std::size_t i = 0; i < m.size(); ++i) {
        acc = acc * (i % 2 == 0 ? Mat2::gen_upper().pow(m[i])
                                : Mat2::gen_lower().pow(m[i]));
    }
    return acc;
}

/// Entry-order property of positive even words:
/// W11 > W12 >= W22 > 0 and W11 > W21 >= W22 > 0.
inline bool check_entry_order(const ExponentVector& m) {
    Mat2 w = word_matrix(m);
    return w.a > w.b && w.b >= w.d && w.d > 0 && w.a > w.c && w.c >= w.d;
}

/// Result of the trace / anti-trace comparison at x = 1.
///  - even length: the even inequality tr* < tr must hold strictly.
///  - odd length >= 3: tr <= tr* must hold; equality is a documented
///    boundary (e.g. the family (1, q, 1)) reported via odd_boundary.
///  - length 1: the odd inequality is outside its hypothesis range
///    (tr(A^m) = 2 can exceed tr* = m); flags stay vacuously true.
struct TraceRatioCheck {
    bool even_ok = true;
    bool odd_ok = true;
    bool odd_boundary = false;  // equality instance on an odd word
};

inline TraceRatioCheck check_trace_ratios(const ExponentVector& m) {
    TraceRatioCheck out;
    Mat2 w = word_matrix(m);
    Integer t = trace(w), s = anti_trace(w);
    if (m.size() % 2 == 0) {
        out.even_ok = s < t;
    } else if (m.size() >= 3) {
        out.odd_ok = t <= s;
        out.odd_boundary = (t == s);
    }
    return out;
}

/// Entry polynomials of W_x rebuilt from the four block-coefficient
/// recurrences (the inductive step of the trace formula's proof), kept as an
/// independent route against the direct product.
inline PolyMat2 word_matrix_poly_via_recurrence(const ExponentVector& m) {
    if (m.size() % 2 != 0)
        throw InternalError("recurrence route needs even length");
    const int d = static_cast<int>(m.size()) / 2;
    if (d == 0) return PolyMat2::identity();

    // co[k] = c_{n,o}(k), ce[k] = c_{n,e}(k) for the current prefix length n.
    std::vector<Integer> co(2 * static_cast<std::size_t>(d) + 3, Integer(0));
    std::vector<Integer> ce(co.size(), Integer(0));
    co[1] = m[0];
    co[2] = m[0] * m[1];
    ce[1] = m[1];

    auto guarded = [](const std::vector<Integer>& c, int k, int hi) -> Integer {
        if (k == 0) return 1;
        if (k < 0 || k > hi) return 0;
        return c[static_cast<std::size_t>(k)];
    };

    for (int n = 1; n < d; ++n) {
        const Integer& mo = m[static_cast<std::size_t>(2 * n)];
        const Integer& me = m[static_cast<std::size_t>(2 * n + 1)];
        std::vector<Integer> co2(co.size(), Integer(0));
        std::vector<Integer> ce2(ce.size(), Integer(0));
        for (int i = 1; i <= n + 1; ++i) {
            co2[static_cast<std::size_t>(2 * i)] =
                guarded(co, 2 * i, 2 * n) + guarded(co, 2 * i - 1, 2 * n) * me +
                guarded(co, 2 * i - 2, 2 * n) * mo * me;
            co2[static_cast<std::size_t>(2 * i - 1)] =
                guarded(co, 2 * i - 1, 2 * n) + guarded(co, 2 * i - 2, 2 * n) * mo;
            ce2[static_cast<std::size_t>(2 * i)] =
                guarded(ce, 2 * i, 2 * n) + guarded(ce, 2 * i - 1, 2 * n) * mo;
            ce2[static_cast<std::size_t>(2 * i - 1)] =
                guarded(ce, 2 * i - 1, 2 * n) + guarded(ce, 2 * i - 2, 2 * n) * me +
                guarded(ce, 2 * i - 3, 2 * n) * mo * me;
        }
        co = std::move(co2);
        ce = std::move(ce2);
    }

    std::vector<Integer> e11(2 * static_cast<std::size_t>(d) + 1, Integer(0));
    std::vector<Integer> e12(e11.size(), Integer(0));
    std::vector<Integer> e21(e11.size(), Integer(0));
    std::vector<Integer> e22(e11.size(), Integer(0));
    e11[0] = 1;
    e22[0] = 1;
    for (int i = 1; i <= d; ++i) {
        e11[static_cast<std::size_t>(2 * i)] = co[static_cast<std::size_t>(2 * i)];
        e12[static_cast<std::size_t>(2 * i - 1)] =
            co[static_cast<std::size_t>(2 * i - 1)];
        e21[static_cast<std::size_t>(2 * i - 1)] =
            ce[static_cast<std::size_t>(2 * i - 1)];
        e22[static_cast<std::size_t>(2 * i)] = ce[static_cast<std::size_t>(2 * i)];
    }
    return {IntPoly(std::move(e11)), IntPoly(std::move(e12)),
            IntPoly(std::move(e21)), IntPoly(std::move(e22))};
}

}  // namespace hbstretch
