#pragma once

#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "hbstretch/errors.hpp"
#include "hbstretch/mat2.hpp"

namespace hbstretch {

enum class FormKind { Hyperbolic, Glide };

inline const char* to_string(FormKind k) {
    return k == FormKind::Hyperbolic ? "hyperbolic" : "glide";
}

/// Conjugacy-canonical shape of a fully irreducible element:
///   Hyperbolic:  sign * A^{a1} B^{a2} ... A^{a_{d-1}} B^{a_d}   (d even)
///   Glide:       sign * A^{a1} B^{a2} ... A^{a_d} * (0 1; 1 0)  (d odd)
/// with A = (1 1; 0 1), B = (1 0; 1 1) and all exponents >= 1.
struct StandardForm {
    int sign = 1;
    FormKind kind = FormKind::Hyperbolic;
    std::vector<Integer> exponents;

    void validate() const {
        if (sign != 1 && sign != -1)
            throw InternalError("StandardForm: sign must be +-1");
        if (exponents.empty())
            throw InternalError("StandardForm: empty exponent sequence");
        for (const auto& e : exponents)
            if (e < 1) throw InternalError("StandardForm: exponent < 1");
        bool even = exponents.size() % 2 == 0;
        if (kind == FormKind::Hyperbolic && !even)
            throw InternalError("StandardForm: hyperbolic syllable count must be even");
        if (kind == FormKind::Glide && even)
            throw InternalError("StandardForm: glide syllable count must be odd");
    }

    friend bool operator==(const StandardForm& x, const StandardForm& y) {
        return x.sign == y.sign && x.kind == y.kind && x.exponents == y.exponents;
    }
};

/// Exact matrix of a standard form.
inline Mat2 assemble(const StandardForm& sf) {
    sf.validate();
    Mat2 acc = Mat2::identity();
    for (std::size_t i = 0; i < sf.exponents.size(); ++i) {
        Mat2 gen = (i % 2 == 0) ? Mat2::gen_upper() : Mat2::gen_lower();
        acc = acc * gen.pow(sf.exponents[i]);
    }
    if (sf.kind == FormKind::Glide) acc = acc * Mat2::gen_swap();
    return sf.sign > 0 ? acc : -acc;
}

namespace detail {

/// One syllable of an RL word: which generator and how many times.
struct Syllable {
    bool upper;  // true: A-syllable, false: B-syllable
    Integer count;
};

inline Integer entry_abs_sum(const Mat2& m) {
    return abs(m.a) + abs(m.b) + abs(m.c) + abs(m.d);
}

/// Finds a conjugate of m with all entries nonnegative. Greedy descent on
/// the entry-absolute-value sum over single-generator conjugations, with a
/// breadth-first fallback (conjugator words up to length 24) if the greedy
/// walk stalls on a plateau. Requires det(m) = 1, trace(m) > 2.
inline Mat2 make_entries_nonnegative(Mat2 m) {
    const Mat2 gens[4] = {Mat2::gen_upper(), Mat2::gen_upper().inverse(),
                          Mat2::gen_lower(), Mat2::gen_lower().inverse()};
    while (!m.nonnegative()) {
        Integer best_score = entry_abs_sum(m);
        bool moved = false;
        Mat2 best = m;
        for (const Mat2& g : gens) {
            Mat2 cand = conjugate(m, g);
            Integer score = entry_abs_sum(cand);
            if (score < best_score) {
                best_score = score;
                best = cand;
                moved = true;
            }
        }
        if (!moved) break;
        m = best;
    }
    if (m.nonnegative()) return m;

    std::deque<Mat2> frontier{m};
    std::unordered_set<std::string> seen{m.to_string()};
    std::size_t budget = 4'000'000;
    for (int depth = 0; depth < 24 && !frontier.empty(); ++depth) {
        std::deque<Mat2> next;
        for (const Mat2& cur : frontier) {
            for (const Mat2& g : gens) {
                Mat2 cand = conjugate(cur, g);
                if (cand.nonnegative()) return cand;
                if (!seen.insert(cand.to_string()).second) continue;
                if (--budget == 0)
                    throw InternalError("make_entries_nonnegative: search budget "
                                        "exhausted for " + m.to_string());
                next.push_back(cand);
            }
        }
        frontier = std::move(next);
    }
    throw InternalError("make_entries_nonnegative: no nonnegative conjugate found "
                        "within word length 24 for " + m.to_string());
}

/// Peels a nonnegative determinant-one matrix into its unique factorization
/// over the free monoid generated by A and B, syllable by syllable. At every
/// step exactly one of A^-1 W, B^-1 W stays entrywise nonnegative.
inline std::vector<Syllable> peel_syllables(Mat2 w) {
    std::vector<Syllable> out;
    const Mat2 id = Mat2::identity();
    while (!(w == id)) {
        // A^-k W = (a - k c, b - k d; c, d): max k keeping both rows nonneg.
        Mat2 after_a(w.a - w.c, w.b - w.d, w.c, w.d);
        bool can_a = after_a.nonnegative();
        Mat2 after_b(w.a, w.b, w.c - w.a, w.d - w.b);
        bool can_b = after_b.nonnegative();
        if (can_a == can_b)
            throw InternalError("peel_syllables: not a unique A/B product: " +
                                w.to_string());
        if (can_a) {
            Integer k;
            if (w.c == 0) {
                k = w.d == 0 ? Integer(0) : floor_div(w.b, w.d);
            } else if (w.d == 0) {
                k = floor_div(w.a, w.c);
            } else {
                k = std::min(floor_div(w.a, w.c), floor_div(w.b, w.d));
            }
            if (k < 1) throw InternalError("peel_syllables: stalled A-peel");
            w = Mat2(w.a - k * w.c, w.b - k * w.d, w.c, w.d);
            out.push_back({true, k});
        } else {
            Integer k;
            if (w.a == 0) {
                k = w.b == 0 ? Integer(0) : floor_div(w.d, w.b);
            } else if (w.b == 0) {
                k = floor_div(w.c, w.a);
            } else {
                k = std::min(floor_div(w.c, w.a), floor_div(w.d, w.b));
            }
            if (k < 1) throw InternalError("peel_syllables: stalled B-peel");
            w = Mat2(w.a, w.b, w.c - k * w.a, w.d - k * w.b);
            out.push_back({false, k});
        }
    }
    return out;
}

/// Merges the cyclic wrap-around (first and last syllable on the same letter
/// belong to one cyclic run) and returns the run sequence.
inline std::vector<Syllable> cyclic_runs(std::vector<Syllable> syl) {
    if (syl.size() >= 2 && syl.front().upper == syl.back().upper) {
        syl.front().count += syl.back().count;
        syl.pop_back();
    }
    return syl;
}

/// All standard-shape readings of a cyclic run sequence (rotations starting
/// at an A-run), as exponent tuples.
inline std::vector<std::vector<Integer>> standard_rotations(
    const std::vector<Syllable>& runs) {
    std::vector<std::vector<Integer>> out;
    const std::size_t n = runs.size();
    for (std::size_t start = 0; start < n; ++start) {
        if (!runs[start].upper) continue;
        std::vector<Integer> tuple;
        tuple.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            tuple.push_back(runs[(start + i) % n].count);
        out.push_back(std::move(tuple));
    }
    return out;
}

}  // namespace detail

/// Conjugacy-invariant standard form of a fully irreducible matrix.
/// Hyperbolic: reduce |trace|-positive representative to a nonnegative
/// matrix, peel the RL word, read syllables. Glide: halve the standard form
/// of M^2 using the period symmetry a_j = a_{j + d}.
inline StandardForm standard_form(const Mat2& m) {
    IsometryType type = classify(m);
    if (type == IsometryType::Hyperbolic) {
        int sgn = sign(trace(m));
        Mat2 pos = sgn > 0 ? m : -m;
        Mat2 nonneg = detail::make_entries_nonnegative(pos);
        auto runs = detail::cyclic_runs(detail::peel_syllables(nonneg));
        auto rotations = detail::standard_rotations(runs);
        if (rotations.empty())
            throw InternalError("standard_form: no A-run in cyclic word");
        std::vector<Integer> best = rotations.front();
        for (const auto& rot : rotations)
            if (rot < best) best = rot;
        return {sgn, FormKind::Hyperbolic, std::move(best)};
    }
    if (type == IsometryType::GlideReflection) {
        StandardForm squared = standard_form(m * m);
        const auto& e = squared.exponents;
        if (e.size() % 2 != 0)
            throw InternalError("standard_form: squared glide has odd length");
        std::size_t d = e.size() / 2;
        if (d % 2 != 1)
            throw InternalError("standard_form: half-period of squared glide "
                                "must be odd, got " + std::to_string(d));
        for (std::size_t j = 0; j < d; ++j) {
            if (!(e[j] == e[j + d]))
                throw InternalError("standard_form: half-period symmetry violated "
                                    "on squared glide word");
        }
        std::vector<Integer> half(e.begin(), e.begin() + static_cast<long>(d));
        return {sign(trace(m)), FormKind::Glide, std::move(half)};
    }
    throw NotFullyIrreducibleError("standard_form: matrix " + m.to_string() +
                                   " is " + std::string(to_string(type)));
}

enum class KeyMode { SL2, GL2 };

inline const char* to_string(KeyMode m) { return m == KeyMode::SL2 ? "sl2" : "gl2"; }

/// Canonical conjugacy key. Hyperbolic exponent tuples are cyclic with
/// letters attached: rotations by an even number of syllables keep every
/// exponent on its letter (SL2-valid); odd rotations amount to the global
/// A<->B relabel, which needs the determinant -1 swap (GL2 only). Glide
/// tuples admit all rotations in both modes, because a glide matrix is
/// itself a determinant -1 element of its centralizer-coset, turning the
/// swap conjugation into an SL2 one.
struct CanonicalKey {
    KeyMode mode = KeyMode::GL2;
    int sign = 1;
    FormKind kind = FormKind::Hyperbolic;
    std::vector<Integer> exponents;

    friend bool operator==(const CanonicalKey& x, const CanonicalKey& y) {
        return x.mode == y.mode && x.sign == y.sign && x.kind == y.kind &&
               x.exponents == y.exponents;
    }
    friend bool operator<(const CanonicalKey& x, const CanonicalKey& y) {
        if (x.mode != y.mode) return x.mode < y.mode;
        if (x.sign != y.sign) return x.sign < y.sign;
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.exponents < y.exponents;
    }

    std::string to_string() const {
        std::string s = std::string(hbstretch::to_string(mode)) + ":" +
                        (sign > 0 ? "+" : "-") + ":" +
                        hbstretch::to_string(kind) + ":[";
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (i) s += ",";
            s += exponents[i].str();
        }
        return s + "]";
    }
};

inline CanonicalKey canonical_key(const StandardForm& sf, KeyMode mode) {
    sf.validate();
    const auto& e = sf.exponents;
    const std::size_t n = e.size();
    std::size_t step = 1;
    if (sf.kind == FormKind::Hyperbolic && mode == KeyMode::SL2) step = 2;
    std::vector<Integer> best;
    for (std::size_t start = 0; start < n; start += step) {
        std::vector<Integer> rot;
        rot.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rot.push_back(e[(start + i) % n]);
        if (best.empty() || rot < best) best = std::move(rot);
    }
    return {mode, sf.sign, sf.kind, std::move(best)};
}

}  // namespace hbstretch
