#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <utility>

#include "hbstretch/json_io.hpp"
#include "hbstretch/verify.hpp"

namespace {

using hbstretch::Integer;
using json = hbstretch::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strict decimal literal -> exact rational num/den. Anything but
/// [-]digits[.digits] is rejected.
std::pair<Integer, Integer> parse_decimal(const std::string& text) {
    Integer num = 0, den = 1;
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
    }
    std::size_t digits = 0;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch == '.') {
            if (seen_dot) throw UsageError("malformed decimal: " + text);
            seen_dot = true;
            continue;
        }
        if (ch < '0' || ch > '9') throw UsageError("malformed decimal: " + text);
        num = num * 10 + (ch - '0');
        if (seen_dot) den *= 10;
        ++digits;
    }
    if (digits == 0) throw UsageError("malformed decimal: " + text);
    return {neg ? -num : num, den};
}

hbstretch::Mat2 parse_matrix_arg(const std::string& text) {
    try {
        return hbstretch::parse_mat2(text);
    } catch (const hbstretch::InvalidMatrixError& e) {
        throw UsageError(e.what());
    }
}

void emit(const json& doc, int indent) {
    std::cout << doc.dump(indent) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stretch-factor certificates for fully irreducible "
                 "outer automorphisms of F2 and their handlebody lifts"};
    app.require_subcommand(1);

    unsigned bits = 128;
    int indent = 2;
    app.add_option("--bits", bits, "working precision in bits")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--json-indent", indent, "indentation of the JSON output")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    std::string matrix_text, mode = "sl2", radius_text, epsilon_text = "0";
    int syllables = 4, max_exp = 4;
    long entries = 10;
    std::string trace_bound_text = "6";
    int conj_bound = 12;
    bool list_classes = false;

    auto* classify_cmd =
        app.add_subcommand("classify", "isometry type of a GL2(Z) element");
    classify_cmd->add_option("matrix", matrix_text, "matrix as \"a,b;c,d\"")
        ->required();

    auto* stdform_cmd =
        app.add_subcommand("stdform", "standard form and canonical keys");
    stdform_cmd->add_option("matrix", matrix_text, "matrix as \"a,b;c,d\"")
        ->required();

    auto* penner_cmd = app.add_subcommand(
        "penner", "twist word, 5x5 representation and lift stretch factor");
    penner_cmd->add_option("matrix", matrix_text, "matrix as \"a,b;c,d\"")
        ->required();

    auto* ratio_cmd = app.add_subcommand(
        "ratio", "mu, lambda and the certified ratio for one element");
    ratio_cmd->add_option("matrix", matrix_text, "matrix as \"a,b;c,d\"")
        ->required();

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "certify every standard form within the given bounds");
    sweep_cmd->add_option("--syllables", syllables, "maximum syllable count")
        ->required();
    sweep_cmd->add_option("--max-exp", max_exp, "maximum exponent")->required();

    auto* count_cmd = app.add_subcommand(
        "count", "conjugacy classes below a log-stretch radius");
    count_cmd->add_option("--mode", mode, "sl2 | gl2 | h2-lower")
        ->capture_default_str();
    count_cmd->add_option("--radius", radius_text, "log-stretch radius R")
        ->required();
    count_cmd->add_option("--epsilon", epsilon_text,
                          "epsilon of the h2-lower formula");
    count_cmd->add_flag("--list", list_classes, "materialize the class list");

    auto* census_cmd = app.add_subcommand(
        "census", "brute-force conjugacy census over bounded entries");
    census_cmd->add_option("--entries", entries, "entry bound")->required();
    census_cmd->add_option("--trace", trace_bound_text, "trace bound")
        ->required();
    census_cmd->add_option("--conj-bound", conj_bound, "conjugator word bound")
        ->required();
    census_cmd->add_option("--mode", mode, "sl2 | gl2 conjugacy")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand(
        "verify", "run every lemma sweep and print a pass/fail table");
    verify_cmd->add_option("--syllables", syllables, "maximum syllable count")
        ->capture_default_str();
    verify_cmd->add_option("--max-exp", max_exp, "maximum exponent")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify_cmd) {
            hbstretch::Mat2 m = parse_matrix_arg(matrix_text);
            hbstretch::IsometryType type = hbstretch::classify(m);
            emit(json{{"type", hbstretch::to_string(type)},
                      {"det", hbstretch::to_json(hbstretch::det(m))},
                      {"trace", hbstretch::to_json(hbstretch::trace(m))},
                      {"anti_trace", hbstretch::to_json(hbstretch::anti_trace(m))},
                      {"fully_irreducible", hbstretch::is_fully_irreducible(m)}},
                 indent);
        } else if (*stdform_cmd) {
            hbstretch::Mat2 m = parse_matrix_arg(matrix_text);
            hbstretch::StandardForm sf = hbstretch::standard_form(m);
            emit(json{{"standard_form", hbstretch::to_json(sf)},
                      {"matrix", hbstretch::assemble(sf).to_string()},
                      {"canonical_sl2", hbstretch::to_json(hbstretch::canonical_key(
                                            sf, hbstretch::KeyMode::SL2))},
                      {"canonical_gl2", hbstretch::to_json(hbstretch::canonical_key(
                                            sf, hbstretch::KeyMode::GL2))}},
                 indent);
        } else if (*penner_cmd) {
            hbstretch::Mat2 m = parse_matrix_arg(matrix_text);
            if (!hbstretch::is_fully_irreducible(m))
                throw hbstretch::NotFullyIrreducibleError(
                    "penner: " + m.to_string() + " is " +
                    hbstretch::to_string(hbstretch::classify(m)));
            hbstretch::StandardForm sf = hbstretch::standard_form(m);
            emit(hbstretch::to_json(hbstretch::handlebody_stretch(sf, bits)),
                 indent);
        } else if (*ratio_cmd) {
            emit(hbstretch::to_json(
                     hbstretch::report(parse_matrix_arg(matrix_text), bits)),
                 indent);
        } else if (*sweep_cmd) {
            emit(hbstretch::to_json(hbstretch::sweep(syllables, max_exp, bits)),
                 indent);
        } else if (*count_cmd) {
            auto [num, den] = parse_decimal(radius_text);
            if (num <= 0) throw UsageError("radius must be positive");
            if (mode == "sl2" || mode == "gl2") {
                hbstretch::StretchLimit limit =
                    hbstretch::StretchLimit::log_radius(num, den);
                hbstretch::CountReport rep = hbstretch::enumerate_classes(
                    mode == "sl2" ? hbstretch::CountMode::SL2
                                  : hbstretch::CountMode::GL2,
                    limit);
                json doc = hbstretch::to_json(rep, list_classes);
                doc["radius"] = radius_text;
                emit(doc, indent);
            } else if (mode == "h2-lower") {
                auto [eps_num, eps_den] = parse_decimal(epsilon_text);
                if (eps_num < 0 || eps_num * 1 >= eps_den)
                    throw UsageError("epsilon must lie in [0, 1)");
                if (!hbstretch::radius_exceeds_log10(num, den))
                    throw hbstretch::RadiusTooSmallError(
                        "h2-lower needs R > log 10");
                long constructive = hbstretch::h2_lower_constructive(
                    hbstretch::StretchLimit::log_radius_minus_log10(num, den));
                hbstretch::RealInterval formula =
                    hbstretch::h2_lower_formula(num, den, eps_num, eps_den, bits);
                emit(json{{"mode", "h2_lower"},
                          {"radius", radius_text},
                          {"epsilon", epsilon_text},
                          {"constructive_count", constructive},
                          {"formula_value", hbstretch::to_json(formula)}},
                     indent);
            } else {
                throw UsageError("unknown count mode: " + mode);
            }
        } else if (*census_cmd) {
            hbstretch::ConjugacyMode cmode;
            if (mode == "sl2") {
                cmode = hbstretch::ConjugacyMode::SL2;
            } else if (mode == "gl2") {
                cmode = hbstretch::ConjugacyMode::GL2;
            } else {
                throw UsageError("unknown census mode: " + mode);
            }
            auto [tb_num, tb_den] = parse_decimal(trace_bound_text);
            if (tb_den != 1 || tb_num < 0)
                throw UsageError("trace bound must be a nonnegative integer");
            emit(hbstretch::to_json(hbstretch::brute_force_class_census(
                     entries, tb_num, conj_bound, cmode)),
                 indent);
        } else if (*verify_cmd) {
            hbstretch::VerifyOptions opt;
            opt.max_syllables = syllables;
            opt.max_exponent = max_exp;
            opt.precision_bits = bits;
            auto results = hbstretch::run_verification(opt);
            bool all_pass = true;
            json checks = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                json entry{{"name", r.name},
                           {"instances", r.instances},
                           {"failures", r.failures},
                           {"exceptions", r.exceptions},
                           {"pass", r.pass}};
                if (!r.failed_samples.empty()) {
                    json failed = json::array();
                    for (const auto& s : r.failed_samples) failed.push_back(s);
                    entry["failed"] = std::move(failed);
                }
                checks.push_back(std::move(entry));
            }
            emit(json{{"checks", std::move(checks)}, {"all_pass", all_pass}},
                 indent);
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hbstretch::Error& e) {
        emit(json{{"error", e.code()}, {"detail", e.what()}}, indent);
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"error", "internal_error"}, {"detail", e.what()}}, indent);
        return 1;
    }
}
