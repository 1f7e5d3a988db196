#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hbstretch/errors.hpp"
#include "hbstretch/int_poly.hpp"
#include "hbstretch/interval.hpp"
#include "hbstretch/mat2.hpp"
#include "hbstretch/quad_surd.hpp"
#include "hbstretch/root_isolation.hpp"
#include "hbstretch/standard_form.hpp"
#include "hbstretch/trace_formula.hpp"

namespace hbstretch {

/// Nonnegative 5x5 integer matrix: the ambient space of the twist
/// representation on measure coordinates.
struct Mat5 {
    std::array<std::array<Integer, 5>, 5> e{};

    static Mat5 identity() {
        Mat5 m;
        for (int i = 0; i < 5; ++i) m.e[i][i] = 1;
        return m;
    }

    friend Mat5 operator*(const Mat5& x, const Mat5& y) {
        Mat5 out;
        for (int i = 0; i < 5; ++i)
            for (int k = 0; k < 5; ++k) {
                if (x.e[i][k] == 0) continue;
                for (int j = 0; j < 5; ++j) out.e[i][j] += x.e[i][k] * y.e[k][j];
            }
        return out;
    }
    friend bool operator==(const Mat5& x, const Mat5& y) { return x.e == y.e; }

    Mat5 pow(const Integer& m) const {
        if (m < 0) throw InternalError("Mat5::pow: negative exponent");
        Mat5 base = *this, acc = identity();
        Integer k = m;
        while (k > 0) {
            if ((k & 1) != 0) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    bool entrywise_positive() const {
        for (const auto& row : e)
            for (const auto& v : row)
                if (v <= 0) return false;
        return true;
    }
    bool entrywise_nonnegative() const {
        for (const auto& row : e)
            for (const auto& v : row)
                if (v < 0) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < 5; ++i) {
            s += i ? ";" : "";
            for (int j = 0; j < 5; ++j) s += (j ? "," : "") + e[i][j].str();
        }
        return s + "]";
    }
};

/// Geometric intersection counts of the five twist curves: symmetric, zero
/// diagonal. The paper prints only the resulting twist matrices; these
/// counts are the unique ones reproducing them through rho below.
inline const std::array<std::array<int, 5>, 5>& intersection_data() {
    static const std::array<std::array<int, 5>, 5> a = {{
        {0, 1, 0, 0, 2},
        {1, 0, 0, 0, 0},
        {0, 0, 0, 1, 0},
        {0, 0, 1, 0, 2},
        {2, 0, 0, 2, 0},
    }};
    return a;
}

/// rho(delta_k) = I_5 + A_k, where A_k keeps only row k of the intersection
/// data (1-based k in 1..5).
inline Mat5 rho_letter(int k) {
    if (k < 1 || k > 5) throw InternalError("rho_letter: index out of range");
    Mat5 m = Mat5::identity();
    const auto& a = intersection_data();
    for (int j = 0; j < 5; ++j) m.e[k - 1][j] += a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
    return m;
}

/// The composite twist constants: A = rho(d1 d3), B = rho(d2 d4),
/// C = rho(d5), and the curve-swap involution E (1<->4, 2<->3).
inline const Mat5& twist_mat_a() {
    static const Mat5 m = rho_letter(1) * rho_letter(3);
    return m;
}
inline const Mat5& twist_mat_b() {
    static const Mat5 m = rho_letter(2) * rho_letter(4);
    return m;
}
inline const Mat5& twist_mat_c() {
    static const Mat5 m = rho_letter(5);
    return m;
}
inline const Mat5& twist_mat_e() {
    static const Mat5 m = [] {
        Mat5 e;
        e.e[0][3] = 1;
        e.e[1][2] = 1;
        e.e[2][1] = 1;
        e.e[3][0] = 1;
        e.e[4][4] = 1;
        return e;
    }();
    return m;
}

/// Startup self-check: the I + A_k products must reproduce the printed
/// constants entry for entry, and E must satisfy its commutation table.
inline void verify_twist_constants() {
    auto lit = [](std::initializer_list<int> vals) {
        Mat5 m;
        auto it = vals.begin();
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) m.e[i][j] = *it++;
        return m;
    };
    const Mat5 a = lit({1, 1, 0, 0, 2,  0, 1, 0, 0, 0,  0, 0, 1, 1, 0,
                        0, 0, 0, 1, 0,  0, 0, 0, 0, 1});
    const Mat5 b = lit({1, 0, 0, 0, 0,  1, 1, 0, 0, 0,  0, 0, 1, 0, 0,
                        0, 0, 1, 1, 2,  0, 0, 0, 0, 1});
    const Mat5 c = lit({1, 0, 0, 0, 0,  0, 1, 0, 0, 0,  0, 0, 1, 0, 0,
                        0, 0, 0, 1, 0,  2, 0, 0, 2, 1});
    const auto& A = twist_mat_a();
    const auto& B = twist_mat_b();
    const auto& C = twist_mat_c();
    const auto& E = twist_mat_e();
    if (!(A == a && B == b && C == c))
        throw InternalError("twist constants disagree with rho(delta) products");
    if (!(E * E == Mat5::identity() && E * A * E == B && E * B * E == A &&
          E * C * E == C))
        throw InternalError("swap involution commutation table failed");
    const auto& data = intersection_data();
    for (int i = 0; i < 5; ++i) {
        if (data[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
            throw InternalError("intersection data has nonzero diagonal");
        for (int j = 0; j < 5; ++j)
            if (data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                data[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw InternalError("intersection data not symmetric");
    }
}

/// Word in the twist semigroup: a leading delta_5, alternating
/// (d1 d3)^k / (d2 d4)^k blocks, and an optional orientation suffix.
///   None: hyperbolic, positive trace      R:  hyperbolic, negative trace
///   E:    glide, positive trace           ER: glide, negative trace
struct PennerWord {
    enum class Suffix { None, R, E, ER };

    struct Block {
        bool pair13;  // true: (d1 d3)^count, false: (d2 d4)^count
        Integer count;
    };

    std::vector<Block> blocks;
    Suffix suffix = Suffix::None;

    bool has_e() const { return suffix == Suffix::E || suffix == Suffix::ER; }

    /// Expanded letter sequence (1-based deltas), leading 5 included.
    /// Only sensible for small exponents; tests use it.
    std::vector<int> letters() const {
        std::vector<int> out{5};
        for (const auto& blk : blocks) {
            for (Integer i = 0; i < blk.count; ++i) {
                out.push_back(blk.pair13 ? 1 : 2);
                out.push_back(blk.pair13 ? 3 : 4);
            }
        }
        return out;
    }

    std::string to_string() const {
        std::string s = "d5";
        for (const auto& blk : blocks) {
            s += blk.pair13 ? " (d1 d3)^" : " (d2 d4)^";
            s += blk.count.str();
        }
        return s;
    }

    std::string suffix_string() const {
        switch (suffix) {
            case Suffix::None: return "";
            case Suffix::R: return "R";
            case Suffix::E: return "E";
            case Suffix::ER: return "ER";
        }
        return "";
    }
};

/// The twist word of a standard form, all four sign/kind cases.
inline PennerWord build_word(const StandardForm& sf) {
    sf.validate();
    PennerWord w;
    for (std::size_t i = 0; i < sf.exponents.size(); ++i)
        w.blocks.push_back({i % 2 == 0, sf.exponents[i]});
    if (sf.kind == FormKind::Hyperbolic) {
        w.suffix = sf.sign > 0 ? PennerWord::Suffix::None : PennerWord::Suffix::R;
    } else {
        w.suffix = sf.sign > 0 ? PennerWord::Suffix::E : PennerWord::Suffix::ER;
    }
    return w;
}

/// Semigroup image of a plain letter sequence; the empty word maps to I_5.
inline Mat5 rho_word(const std::vector<int>& letters) {
    Mat5 acc = Mat5::identity();
    for (int k : letters) acc = acc * rho_letter(k);
    return acc;
}

/// Measure-coordinate image of a word: C times the block products, times E
/// when the suffix involves the swap. The R suffix acts trivially here (its
/// square cancels and it commutes with every twist), so it contributes the
/// identity.
inline Mat5 rho_word(const PennerWord& w) {
    Mat5 acc = twist_mat_c();
    for (const auto& blk : w.blocks) {
        const Mat5& base = blk.pair13 ? twist_mat_a() : twist_mat_b();
        acc = acc * base.pow(blk.count);
    }
    if (w.has_e()) acc = acc * twist_mat_e();
    return acc;
}

/// Abelianized 2x2 image of a word: (d1 d3) block -> A, (d2 d4) block -> B,
/// leading d5 -> identity, suffix E -> swap, suffix R -> -I.
inline Mat2 abelianize(const PennerWord& w) {
    Mat2 acc = Mat2::identity();
    for (const auto& blk : w.blocks) {
        Mat2 gen = blk.pair13 ? Mat2::gen_upper() : Mat2::gen_lower();
        acc = acc * gen.pow(blk.count);
    }
    if (w.has_e()) acc = acc * Mat2::gen_swap();
    if (w.suffix == PennerWord::Suffix::R || w.suffix == PennerWord::Suffix::ER)
        acc = -acc;
    return acc;
}

/// Reads the 2x2 block data out of a product of A- and B-powers and checks
/// every entry of the 5x5 template:
///   (a b 0 0 2b; c d 0 0 2d-2; 0 0 a b 2a-2; 0 0 c d 2c; 0 0 0 0 1).
inline Mat2 block_decompose(const Mat5& w5) {
    Mat2 m(w5.e[0][0], w5.e[0][1], w5.e[1][0], w5.e[1][1]);
    auto expect = [&](int i, int j, const Integer& want) {
        if (w5.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != want)
            throw BlockShapeViolationError(
                "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") = " + w5.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str() +
                ", template wants " + want.str());
    };
    const Integer zero(0), one(1);
    expect(0, 2, zero);
    expect(0, 3, zero);
    expect(0, 4, 2 * m.b);
    expect(1, 2, zero);
    expect(1, 3, zero);
    expect(1, 4, 2 * m.d - 2);
    expect(2, 0, zero);
    expect(2, 1, zero);
    expect(2, 2, m.a);
    expect(2, 3, m.b);
    expect(2, 4, 2 * m.a - 2);
    expect(3, 0, zero);
    expect(3, 1, zero);
    expect(3, 2, m.c);
    expect(3, 3, m.d);
    expect(3, 4, 2 * m.c);
    for (int j = 0; j < 4; ++j) expect(4, j, zero);
    expect(4, 4, one);
    return m;
}

/// Characteristic polynomial of C*W as a closed form in the trace t and
/// anti-trace s of the 2x2 word: (x-1)(x^2 - t x + 1)(x^2 - (t+4s) x + 1).
inline IntPoly charpoly_cw(const Integer& t, const Integer& s) {
    IntPoly lin{-1, 1};
    IntPoly q1{1, -t, 1};
    IntPoly q2{1, -(t + 4 * s), 1};
    return lin * q1 * q2;
}

/// Characteristic polynomial of C*W*E:
/// (x-1)(x^4 - 4s x^3 - (s^2 + 4ts + 2) x^2 - 4s x + 1).
inline IntPoly charpoly_cwe(const Integer& t, const Integer& s) {
    IntPoly lin{-1, 1};
    IntPoly quartic{1, -4 * s, -(s * s + 4 * t * s + 2), -4 * s, 1};
    return lin * quartic;
}

/// Direct characteristic polynomial det(xI - M) of a 5x5 integer matrix by
/// Laplace expansion over polynomial entries; the independent route the
/// closed forms are checked against.
inline IntPoly charpoly5(const Mat5& m) {
    std::vector<std::vector<IntPoly>> p(5, std::vector<IntPoly>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? IntPoly{-m.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1}
                       : IntPoly::constant(-m.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    auto det_rec = [](auto&& self, const std::vector<std::vector<IntPoly>>& a,
                      std::vector<int> cols) -> IntPoly {
        std::size_t row = 5 - cols.size();
        if (cols.size() == 1)
            return a[row][static_cast<std::size_t>(cols[0])];
        IntPoly acc;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<int> rest;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            IntPoly minor = self(self, a, rest);
            IntPoly term = a[row][static_cast<std::size_t>(cols[k])] * minor;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det_rec(det_rec, p, {0, 1, 2, 3, 4});
}

/// Closed-form dominant eigenvalue of C*W for a positive even word with
/// trace t and anti-trace s: (t + 4s + sqrt((t+4s)^2 - 4)) / 2. Verifies the
/// strict ordering of the five closed-form eigenvalues before returning.
inline QuadSurd lambda_hyperbolic(const Integer& t, const Integer& s) {
    if (t < 2 || s < 1)
        throw InternalError("lambda_hyperbolic: needs t >= 2, s >= 1");
    Integer u = t + 4 * s;
    QuadSurd big_plus = QuadSurd::make(u, 1, u * u - 4, 2);
    QuadSurd big_minus = QuadSurd::make(u, -1, u * u - 4, 2);
    QuadSurd small_plus = QuadSurd::make(t, 1, t * t - 4, 2);
    QuadSurd small_minus = QuadSurd::make(t, -1, t * t - 4, 2);
    QuadSurd one = QuadSurd::from_integer(1);
    // big+ > small+ > 1 > small- > big- > 0, certified exactly.
    bool ordered = surd_compare_certified(big_plus, small_plus) > 0 &&
                   surd_compare_certified(small_plus, one) > 0 &&
                   surd_compare_certified(one, small_minus) > 0 &&
                   surd_compare_certified(small_minus, big_minus) > 0 &&
                   big_minus.sign() > 0;
    if (!ordered)
        throw InternalError("lambda_hyperbolic: eigenvalue ordering failed for t=" +
                            t.str() + " s=" + s.str());
    return big_plus;
}

/// Certified enclosure of the glide dominant eigenvalue
///   s + sqrt(5s^2+4ts+4)/2 + sqrt(9s^2+4ts+4s*sqrt(5s^2+4ts+4))/2,
/// cross-certified to contain a root of the quartic factor of charpoly_cwe.
inline RealInterval lambda_glide(const Integer& t, const Integer& s,
                                 unsigned precision_bits) {
    if (t < 2 || s < 1) throw InternalError("lambda_glide: needs t >= 2, s >= 1");
    IntPoly quartic = charpoly_cwe(t, s).deflate_root(Integer(1));
    for (unsigned bits = precision_bits; bits <= 4096; bits *= 2) {
        RealInterval inner =
            interval_sqrt(RealInterval(5 * s * s + 4 * t * s + 4), bits);
        RealInterval outer_arg =
            RealInterval(9 * s * s + 4 * t * s) + RealInterval(4 * s) * inner;
        RealInterval outer = interval_sqrt(outer_arg, bits);
        RealInterval lam =
            (RealInterval(s) + (inner + outer) * RealInterval(Dyadic(Integer(1), -1)))
                .round_out(bits + 16);
        // Root certificate: the quartic changes sign across the enclosure.
        if (quartic.sign_at(lam.lower()) * quartic.sign_at(lam.upper()) < 0 &&
            lam.width() <= Dyadic(Integer(1), -static_cast<long>(precision_bits)))
            return lam;
    }
    throw PrecisionExhaustedError("lambda_glide: certificate did not settle for t=" +
                                  t.str() + " s=" + s.str());
}

/// Certified spectral-radius enclosure of a primitive nonnegative matrix by
/// Collatz-Wielandt ratio bounds on an iterated positive vector. Primitivity
/// is established by repeated squaring (exponent 32 > (5-1)^2 + 1 suffices
/// for 5x5 by Wielandt's bound).
inline RealInterval perron_power_iteration(const Mat5& w5,
                                           unsigned precision_bits) {
    if (!w5.entrywise_nonnegative())
        throw InternalError("perron_power_iteration: negative entry");
    Mat5 power = w5;
    bool primitive = false;
    for (int i = 0; i <= 5; ++i) {
        if (power.entrywise_positive()) {
            primitive = true;
            break;
        }
        power = power * power;
    }
    if (!primitive)
        throw NotPrimitiveError("no power of the matrix is entrywise positive");

    std::array<Integer, 5> v;
    v.fill(1);
    const unsigned keep_bits = precision_bits + 96;
    const Integer width_scale = Integer(1) << (precision_bits + 2);
    for (unsigned iter = 0; iter < 200000; ++iter) {
        std::array<Integer, 5> next;
        for (int i = 0; i < 5; ++i) {
            Integer acc = 0;
            for (int j = 0; j < 5; ++j)
                acc += w5.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       v[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(i)] = acc;
        }
        // Collatz-Wielandt: min_i next_i/v_i <= rho <= max_i next_i/v_i.
        int lo_idx = 0, hi_idx = 0;
        auto ratio_less = [&](int x, int y) {
            return next[static_cast<std::size_t>(x)] * v[static_cast<std::size_t>(y)] <
                   next[static_cast<std::size_t>(y)] * v[static_cast<std::size_t>(x)];
        };
        for (int i = 1; i < 5; ++i) {
            if (ratio_less(i, lo_idx)) lo_idx = i;
            if (ratio_less(hi_idx, i)) hi_idx = i;
        }
        const Integer &ln = next[static_cast<std::size_t>(lo_idx)],
                      &ld = v[static_cast<std::size_t>(lo_idx)];
        const Integer &hn = next[static_cast<std::size_t>(hi_idx)],
                      &hd = v[static_cast<std::size_t>(hi_idx)];
        // Gap test: hn/hd - ln/ld <= 2^-(precision_bits+2), exactly. Endpoint
        // rounding at absolute scale 2^-(precision_bits+4) keeps the total
        // width strictly below 2^-precision_bits.
        if ((hn * ld - ln * hd) * width_scale <= hd * ld) {
            const long shift = static_cast<long>(precision_bits) + 4;
            const Integer scale = Integer(1) << static_cast<unsigned>(shift);
            Dyadic lo(floor_div(ln * scale, ld), -shift);
            Dyadic hi(ceil_div(hn * scale, hd), -shift);
            return RealInterval(lo, hi);
        }
        v = next;
        // Rescale to keep mantissas bounded; any positive vector is valid.
        unsigned max_bits = 0;
        for (const auto& x : v) max_bits = std::max(max_bits, bit_length(x));
        if (max_bits > keep_bits) {
            unsigned drop = max_bits - keep_bits;
            for (auto& x : v) {
                x >>= drop;
                if (x == 0) x = 1;
            }
        }
    }
    throw PrecisionExhaustedError("perron_power_iteration: ratio gap stalled");
}

/// Stretch factor of the constructed handlebody lift of a standard form.
struct HandlebodyStretch {
    std::optional<QuadSurd> lambda_exact;  // hyperbolic cases
    RealInterval lambda_interval;          // always set
    Mat5 matrix;                           // C*W or C*W*E
    PennerWord word;
    Integer word_trace;       // t of the underlying 2x2 word
    Integer word_anti_trace;  // s of the underlying 2x2 word
};

/// lambda of the Penner lift: hyperbolic signs share the C*W eigenvalue
/// (the R suffix squares away); glide signs share the C*W*E eigenvalue.
inline HandlebodyStretch handlebody_stretch(const StandardForm& sf,
                                            unsigned precision_bits) {
    sf.validate();
    HandlebodyStretch out;
    out.word = build_word(sf);
    out.matrix = rho_word(out.word);
    Mat2 w1 = word_matrix(sf.exponents);
    out.word_trace = trace(w1);
    out.word_anti_trace = anti_trace(w1);
    if (sf.kind == FormKind::Hyperbolic) {
        QuadSurd lam = lambda_hyperbolic(out.word_trace, out.word_anti_trace);
        out.lambda_exact = lam;
        out.lambda_interval = lam.to_interval(precision_bits);
    } else {
        out.lambda_interval =
            lambda_glide(out.word_trace, out.word_anti_trace, precision_bits);
    }
    return out;
}

}  // namespace hbstretch
