#pragma once

#include <json.hpp>

#include "hbstretch/counting.hpp"
#include "hbstretch/penner.hpp"
#include "hbstretch/spectra.hpp"

namespace hbstretch {

using json = nlohmann::ordered_json;

/// Integers render as JSON numbers while they fit in the double-exact range,
/// as decimal strings beyond; output stays loss-free either way.
inline json to_json(const Integer& v) {
    static const Integer max_exact = Integer(1) << 53;
    if (abs(v) <= max_exact) return static_cast<std::int64_t>(v);
    return v.str();
}

/// Interval endpoints as outward-rounded 30-digit decimal strings.
inline json to_json(const RealInterval& iv) {
    return json::array(
        {iv.lower().to_decimal(30, true), iv.upper().to_decimal(30, false)});
}

inline json to_json(const QuadSurd& s) {
    return json{{"p", to_json(s.p())},
                {"q", to_json(s.q())},
                {"D", to_json(s.D())},
                {"r", to_json(s.r())}};
}

inline json to_json(const Mat2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}),
                        json::array({to_json(m.c), to_json(m.d)})});
}

inline json to_json(const Mat5& m) {
    json rows = json::array();
    for (int i = 0; i < 5; ++i) {
        json row = json::array();
        for (int j = 0; j < 5; ++j)
            row.push_back(to_json(m.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const StandardForm& sf) {
    json exps = json::array();
    for (const auto& e : sf.exponents) exps.push_back(to_json(e));
    return json{{"sign", sf.sign},
                {"kind", to_string(sf.kind)},
                {"exponents", std::move(exps)}};
}

inline json to_json(const CanonicalKey& key) {
    json exps = json::array();
    for (const auto& e : key.exponents) exps.push_back(to_json(e));
    return json{{"mode", to_string(key.mode)},
                {"sign", key.sign},
                {"kind", to_string(key.kind)},
                {"exponents", std::move(exps)}};
}

inline json to_json(const HandlebodyStretch& hs) {
    return json{{"lambda_exact",
                 hs.lambda_exact ? to_json(*hs.lambda_exact) : json(nullptr)},
                {"lambda_interval", to_json(hs.lambda_interval)},
                {"matrix", to_json(hs.matrix)},
                {"word", hs.word.to_string()},
                {"suffix", hs.word.suffix_string()}};
}

inline json to_json(const SpectraReport& rep) {
    return json{
        {"input", rep.input.to_string()},
        {"isometry", to_string(rep.isometry)},
        {"standard_form", to_json(rep.sform)},
        {"mu", to_json(rep.mu)},
        {"lambda_exact",
         rep.lambda_exact ? to_json(*rep.lambda_exact) : json(nullptr)},
        {"lambda_interval", to_json(rep.lambda_interval)},
        {"ratio", to_json(rep.ratio)},
        {"cert_lower", rep.cert_lower},
        {"cert_ten", rep.cert_ten}};
}

inline json to_json(const SweepSummary& s) {
    return json{{"count", s.count},
                {"failures", s.failures},
                {"max_ratio", to_json(s.max_ratio)},
                {"argmax_form", to_json(s.argmax)}};
}

inline json to_json(const CountReport& rep, bool list_classes) {
    json out{{"mode", rep.mode == CountMode::SL2 ? "sl2" : "gl2"},
             {"radius", rep.radius},
             {"class_count", rep.class_count}};
    json by_trace = json::object();
    for (const auto& [tr, n] : rep.hyperbolic_classes_by_trace)
        by_trace[tr.str()] = n;
    out["hyperbolic_classes_by_trace"] = std::move(by_trace);
    if (rep.mode == CountMode::GL2) {
        json glide = json::object();
        for (const auto& [tr, n] : rep.glide_classes_by_trace)
            glide[tr.str()] = n;
        out["glide_classes_by_trace"] = std::move(glide);
    }
    if (list_classes) {
        json classes = json::array();
        for (const auto& key : rep.classes) classes.push_back(to_json(key));
        out["classes"] = std::move(classes);
    }
    return out;
}

inline json to_json(const std::vector<CensusBucket>& buckets) {
    json arr = json::array();
    long total = 0;
    for (const auto& b : buckets) {
        arr.push_back(json{{"det", b.det},
                           {"trace", to_json(b.trace)},
                           {"classes", b.classes},
                           {"matrices", b.matrices}});
        total += b.classes;
    }
    return json{{"buckets", std::move(arr)}, {"total_classes", total}};
}

}  // namespace hbstretch
