#pragma once

#include <optional>
#include <vector>

#include "hbstretch/penner.hpp"
#include "hbstretch/standard_form.hpp"

namespace hbstretch {

/// The per-element certificate bundle: stretch factor mu of the outer
/// automorphism, stretch factor lambda of its constructed pseudo-Anosov
/// lift, their ratio, and the two certified bounds mu <= lambda and
/// lambda/mu < 10. Certificates are set only when the interval evidence is
/// conclusive (enclosures strictly separated from the thresholds).
struct SpectraReport {
    Mat2 input;
    IsometryType isometry = IsometryType::Hyperbolic;
    StandardForm sform;
    QuadSurd mu;
    std::optional<QuadSurd> lambda_exact;
    RealInterval lambda_interval;
    RealInterval ratio;
    bool cert_lower = false;
    bool cert_ten = false;
};

/// mu of a standard form, read off the word trace without assembling:
/// hyperbolic word trace t gives (t + sqrt(t^2-4))/2; a glide's matrix trace
/// is the word anti-trace s, giving (s + sqrt(s^2+4))/2.
inline QuadSurd mu_of_form(const StandardForm& sf) {
    Mat2 w = word_matrix(sf.exponents);
    if (sf.kind == FormKind::Hyperbolic) {
        Integer t = trace(w);
        return QuadSurd::make(t, 1, t * t - 4, 2);
    }
    Integer s = anti_trace(w);
    return QuadSurd::make(s, 1, s * s + 4, 2);
}

/// Certificate computation with adaptive refinement: starts at
/// precision_bits and doubles (up to 4096) until both thresholds separate.
inline SpectraReport report_form(const StandardForm& sf, unsigned precision_bits) {
    SpectraReport rep;
    rep.sform = sf;
    rep.input = assemble(sf);
    rep.isometry = classify(rep.input);
    rep.mu = mu_of_form(sf);

    HandlebodyStretch hs = handlebody_stretch(sf, precision_bits);
    rep.lambda_exact = hs.lambda_exact;
    rep.lambda_interval = hs.lambda_interval;

    for (unsigned bits = precision_bits; bits <= 4096; bits *= 2) {
        RealInterval lam = bits == precision_bits
                               ? hs.lambda_interval
                               : handlebody_stretch(sf, bits).lambda_interval;
        RealInterval mu_iv = rep.mu.to_interval(bits);
        RealInterval ratio = interval_div(lam, mu_iv, bits);
        if (bits == precision_bits) rep.ratio = ratio;
        bool lower_ok = mu_iv.certainly_less(lam);
        bool ten_ok = ratio.upper() < Dyadic(Integer(10));
        if (lower_ok && ten_ok) {
            rep.cert_lower = true;
            rep.cert_ten = true;
            return rep;
        }
    }
    return rep;  // certificates left unset: evidence inconclusive at 4096 bits
}

inline SpectraReport report(const Mat2& m, unsigned precision_bits) {
    if (!is_fully_irreducible(m))
        throw NotFullyIrreducibleError("report: " + m.to_string() + " is " +
                                       std::string(to_string(classify(m))));
    StandardForm sf = standard_form(m);
    SpectraReport rep = report_form(sf, precision_bits);
    rep.input = m;
    rep.isometry = classify(m);
    if (!(rep.mu == mu_stretch(m)))
        throw InternalError("report: standard form changed the stretch factor");
    return rep;
}

/// Deterministic enumeration of standard forms: syllable count ascending
/// (even for hyperbolic, odd for glide), exponent tuples lexicographic,
/// positive sign before negative.
inline std::vector<StandardForm> enumerate_standard_forms(int max_syllables,
                                                          int max_exponent) {
    std::vector<StandardForm> out;
    for (int d = 1; d <= max_syllables; ++d) {
        FormKind kind = (d % 2 == 0) ? FormKind::Hyperbolic : FormKind::Glide;
        std::vector<Integer> tuple(static_cast<std::size_t>(d), Integer(1));
        while (true) {
            for (int sign : {1, -1})
                out.push_back({sign, kind, tuple});
            int pos = d - 1;
            while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] ==
                                   Integer(max_exponent)) {
                tuple[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++tuple[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

/// Sweep summary over all standard forms within the bounds. `failures`
/// counts forms whose certificates could not be established (expected zero).
struct SweepSummary {
    unsigned long count = 0;
    unsigned long failures = 0;
    RealInterval max_ratio;
    StandardForm argmax;
};

inline SweepSummary sweep(int max_syllables, int max_exponent,
                          unsigned precision_bits) {
    SweepSummary summary;
    bool first = true;
    for (const StandardForm& sf :
         enumerate_standard_forms(max_syllables, max_exponent)) {
        SpectraReport rep = report_form(sf, precision_bits);
        ++summary.count;
        if (!(rep.cert_lower && rep.cert_ten)) ++summary.failures;
        if (first || rep.ratio.upper() > summary.max_ratio.upper()) {
            summary.max_ratio = rep.ratio;
            summary.argmax = sf;
            first = false;
        }
    }
    return summary;
}

}  // namespace hbstretch
