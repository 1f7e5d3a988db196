#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hbstretch/conjugacy.hpp"
#include "hbstretch/interval.hpp"
#include "hbstretch/quad_surd.hpp"
#include "hbstretch/spectra.hpp"
#include "hbstretch/standard_form.hpp"

namespace hbstretch {

/// Dyadic enclosure of the exact rational num/den.
inline RealInterval rational_enclosure(const Integer& num, const Integer& den,
                                       unsigned bits) {
    Dyadic n{num}, d{den};
    return RealInterval(div_down(n, d, bits), div_up(n, d, bits));
}

/// Enclosure of exp(num/den); monotonicity of exp turns the endpoint
/// enclosures into a sound hull.
inline RealInterval exp_of_rational(const Integer& num, const Integer& den,
                                    unsigned bits) {
    RealInterval r = rational_enclosure(num, den, bits + 8);
    RealInterval lo = exp_enclosure(r.lower(), bits);
    RealInterval hi = exp_enclosure(r.upper(), bits);
    return RealInterval(lo.lower(), hi.upper());
}

/// Certified test of R > log 10, i.e. e^R > 10, for rational R. Terminates:
/// e^R is never exactly 10 for rational R.
inline bool radius_exceeds_log10(const Integer& num, const Integer& den) {
    const Dyadic ten{Integer(10)};
    for (unsigned bits = 64; bits <= 1u << 16; bits *= 2) {
        RealInterval e = exp_of_rational(num, den, bits);
        if (e.lower() > ten) return true;
        if (e.upper() < ten) return false;
    }
    throw PrecisionExhaustedError("radius_exceeds_log10 did not resolve");
}

/// An upper bound on admitted stretch factors mu. Either an exact algebraic
/// bound (tests pin these) or a certified enclosure generator, e.g. e^R for
/// a dyadic log-radius R (the CLI path). Admission mu <= bound is decided
/// exactly in the first case and by adaptive refinement in the second;
/// refinement terminates because e^R (R a nonzero rational) is
/// transcendental and so never equals an algebraic mu.
class StretchLimit {
public:
    static StretchLimit exact(QuadSurd bound, std::string desc) {
        StretchLimit lim;
        lim.exact_ = std::move(bound);
        lim.desc_ = std::move(desc);
        return lim;
    }

    static StretchLimit from_enclosure(std::function<RealInterval(unsigned)> gen,
                                       std::string desc) {
        StretchLimit lim;
        lim.gen_ = std::move(gen);
        lim.desc_ = std::move(desc);
        return lim;
    }

    /// Bound e^R for an exact rational log-radius R = num/den.
    static StretchLimit log_radius(const Integer& num, const Integer& den) {
        return from_enclosure(
            [num, den](unsigned bits) { return exp_of_rational(num, den, bits); },
            "exp(" + num.str() + "/" + den.str() + ")");
    }

    /// Bound e^R / 10: the constructive radius shrink of the counting chain.
    static StretchLimit log_radius_minus_log10(const Integer& num,
                                               const Integer& den) {
        return from_enclosure(
            [num, den](unsigned bits) {
                RealInterval e = exp_of_rational(num, den, bits);
                return interval_div(e, RealInterval(Integer(10)), bits);
            },
            "exp(" + num.str() + "/" + den.str() + ")/10");
    }

    const std::string& description() const { return desc_; }

    /// Certified decision of mu <= bound (inclusive).
    bool admits(const QuadSurd& mu) const {
        if (exact_) return surd_compare_certified(mu, *exact_) <= 0;
        for (unsigned bits = 128; bits <= 4096; bits *= 2) {
            RealInterval b = gen_(bits);
            RealInterval m = mu.to_interval(bits);
            if (m.upper() < b.lower()) return true;
            if (m.lower() > b.upper()) return false;
        }
        throw PrecisionExhaustedError("StretchLimit::admits: " + mu.to_string() +
                                      " vs " + desc_);
    }

private:
    std::optional<QuadSurd> exact_;
    std::function<RealInterval(unsigned)> gen_;
    std::string desc_;
};

inline QuadSurd mu_hyperbolic_of_trace(const Integer& t) {
    return QuadSurd::make(t, 1, t * t - 4, 2);
}
inline QuadSurd mu_glide_of_trace(const Integer& s) {
    return QuadSurd::make(s, 1, s * s + 4, 2);
}

/// Largest integer trace t >= 3 with mu_hyperbolic(t) admitted (2 if none:
/// no hyperbolic class qualifies).
inline Integer max_hyperbolic_trace(const StretchLimit& limit) {
    Integer t = 2;
    while (limit.admits(mu_hyperbolic_of_trace(t + 1))) ++t;
    return t;
}

/// Largest integer s >= 1 with mu_glide(s) admitted (0 if none).
inline Integer max_glide_trace(const StretchLimit& limit) {
    Integer s = 0;
    while (limit.admits(mu_glide_of_trace(s + 1))) ++s;
    return s;
}

namespace detail {

/// DFS over alternating-word exponent tuples with an exact monotone prune:
/// nonnegative words only grow under right multiplication by words >= I, so
/// a prefix whose cheapest completion already exceeds the cap is dead.
/// `measure` is trace (even/hyperbolic tuples) or anti-trace (odd/glide).
inline void enumerate_tuples(const Integer& cap, bool odd_targets,
                             const std::function<Integer(const Mat2&)>& measure,
                             const std::function<void(const std::vector<Integer>&)>& emit) {
    std::vector<Integer> tuple;
    Mat2 a = Mat2::gen_upper(), b = Mat2::gen_lower();
    auto rec = [&](auto&& self, const Mat2& prefix) -> void {
        bool at_odd = tuple.size() % 2 == 1;
        bool next_upper = !at_odd;
        const Mat2& gen = next_upper ? a : b;
        // Cheapest completion after appending gen^e: a single opposite
        // letter when that is needed to restore the target parity.
        const Mat2& closer = next_upper ? b : a;
        for (Integer e = 1;; ++e) {
            Mat2 extended = prefix * gen.pow(e);
            bool lands_on_target = odd_targets ? !at_odd : at_odd;
            Integer cheapest = lands_on_target
                                   ? measure(extended)
                                   : measure(extended * closer);
            if (cheapest > cap) break;
            tuple.push_back(e);
            if (lands_on_target && measure(extended) <= cap) emit(tuple);
            self(self, extended);
            tuple.pop_back();
        }
    };
    rec(rec, Mat2::identity());
}

}  // namespace detail

/// All even exponent tuples whose word trace is at most tmax.
inline std::vector<std::vector<Integer>> enumerate_even_tuples(const Integer& tmax) {
    std::vector<std::vector<Integer>> out;
    if (tmax < 3) return out;
    detail::enumerate_tuples(
        tmax, false, [](const Mat2& m) { return trace(m); },
        [&](const std::vector<Integer>& t) { out.push_back(t); });
    return out;
}

/// All odd exponent tuples whose word anti-trace (the glide trace) is at
/// most smax.
inline std::vector<std::vector<Integer>> enumerate_odd_tuples(const Integer& smax) {
    std::vector<std::vector<Integer>> out;
    if (smax < 1) return out;
    detail::enumerate_tuples(
        smax, true, [](const Mat2& m) { return anti_trace(m); },
        [&](const std::vector<Integer>& t) { out.push_back(t); });
    return out;
}

enum class CountMode { SL2, GL2 };

/// Conjugacy-class count below a stretch bound.
struct CountReport {
    CountMode mode = CountMode::SL2;
    std::string radius;
    long class_count = 0;
    std::vector<CanonicalKey> classes;  // sorted, both signs materialized
    // Positive-trace class counts keyed by trace, for the census cross-check
    // (negative-trace counts mirror them exactly).
    std::map<Integer, long> hyperbolic_classes_by_trace;
    std::map<Integer, long> glide_classes_by_trace;
};

/// SL2 mode: conjugacy classes of hyperbolic elements of SL2(Z) with
/// mu <= bound (the pseudo-Anosov classes of the once-punctured torus).
/// GL2 mode: fully irreducible GL2(Z) classes, hyperbolic and glide.
/// Both signs are counted: W and -W have distinct traces, hence are never
/// conjugate, and share mu.
inline CountReport enumerate_classes(CountMode mode, const StretchLimit& limit) {
    CountReport rep;
    rep.mode = mode;
    rep.radius = limit.description();
    KeyMode key_mode = mode == CountMode::SL2 ? KeyMode::SL2 : KeyMode::GL2;

    std::set<CanonicalKey> keys;
    Integer tmax = max_hyperbolic_trace(limit);
    for (const auto& tuple : enumerate_even_tuples(tmax)) {
        StandardForm sf{1, FormKind::Hyperbolic, tuple};
        CanonicalKey key = canonical_key(sf, key_mode);
        if (keys.insert(key).second) {
            ++rep.hyperbolic_classes_by_trace[trace(word_matrix(tuple))];
        }
    }
    if (mode == CountMode::GL2) {
        Integer smax = max_glide_trace(limit);
        for (const auto& tuple : enumerate_odd_tuples(smax)) {
            StandardForm sf{1, FormKind::Glide, tuple};
            CanonicalKey key = canonical_key(sf, key_mode);
            if (keys.insert(key).second) {
                ++rep.glide_classes_by_trace[anti_trace(word_matrix(tuple))];
            }
        }
    }
    for (const CanonicalKey& key : keys) {
        rep.classes.push_back(key);
        CanonicalKey negative = key;
        negative.sign = -1;
        rep.classes.push_back(negative);
    }
    std::sort(rep.classes.begin(), rep.classes.end());
    rep.class_count = static_cast<long>(rep.classes.size());
    return rep;
}

/// N_{1,1}: pseudo-Anosov classes of Mod(S_{1,1}) = hyperbolic SL2(Z)
/// classes, both signs.
inline CountReport n11(const StretchLimit& limit) {
    return enumerate_classes(CountMode::SL2, limit);
}

/// Constructive lower bound for the handlebody counting function:
/// floor(N_{1,1}(R - log 10) / 2). The limit passed here is already the
/// shrunk bound e^{R - log 10}.
inline long h2_lower_constructive(const StretchLimit& shrunk_limit) {
    return n11(shrunk_limit).class_count / 2;
}

/// Enclosure of the asymptotic comparison value (1 - eps) e^{2R} / (400 R);
/// both R = num/den and eps are exact rationals.
inline RealInterval h2_lower_formula(const Integer& r_num, const Integer& r_den,
                                     const Integer& eps_num, const Integer& eps_den,
                                     unsigned bits) {
    if (r_num.sign() * r_den.sign() <= 0)
        throw RadiusTooSmallError("formula needs R > 0");
    RealInterval e2r = exp_of_rational(2 * r_num, r_den, bits);
    RealInterval numer = e2r * RealInterval(Dyadic(eps_den - eps_num));
    // 400 * eps_den * R = 400 * eps_den * r_num / r_den.
    RealInterval denom = rational_enclosure(Integer(400) * eps_den * r_num,
                                            r_den, bits);
    return interval_div(numer, denom, bits);
}

/// Census bucket: conjugacy classes found among explicitly enumerated
/// matrices with the given determinant and trace.
struct CensusBucket {
    int det = 1;
    Integer trace;
    long classes = 0;
    long matrices = 0;
};

/// Enumerates every fully irreducible matrix with |entries| <= entry_bound
/// and |trace| <= trace_bound, then groups each (det, trace) bucket with the
/// conjugacy oracle. Independent of the standard-form path end to end.
inline std::vector<CensusBucket> brute_force_class_census(
    long entry_bound, const Integer& trace_bound, int conj_word_bound,
    ConjugacyMode mode = ConjugacyMode::SL2) {
    std::map<std::pair<int, Integer>, std::vector<Mat2>> buckets;
    for (long a = -entry_bound; a <= entry_bound; ++a) {
        for (long d = -entry_bound; d <= entry_bound; ++d) {
            if (abs(Integer(a + d)) > trace_bound) continue;
            for (int dt : {1, -1}) {
                Integer k = Integer(a) * Integer(d) - dt;  // = b*c
                if (k == 0) continue;  // triangular: never fully irreducible
                for (long b = -entry_bound; b <= entry_bound; ++b) {
                    if (b == 0 || k % b != 0) continue;
                    Integer c = k / b;
                    if (abs(c) > entry_bound) continue;
                    Mat2 m{Integer(a), Integer(b), c, Integer(d)};
                    if (!is_fully_irreducible(m)) continue;
                    buckets[{dt, trace(m)}].push_back(m);
                }
            }
        }
    }
    std::vector<CensusBucket> out;
    for (auto& [key, mats] : buckets) {
        auto ids = group_into_classes(mats, conj_word_bound, mode);
        std::set<int> distinct(ids.begin(), ids.end());
        CensusBucket bucket;
        bucket.det = key.first;
        bucket.trace = key.second;
        bucket.classes = static_cast<long>(distinct.size());
        bucket.matrices = static_cast<long>(mats.size());
        out.push_back(std::move(bucket));
    }
    return out;
}

}  // namespace hbstretch
