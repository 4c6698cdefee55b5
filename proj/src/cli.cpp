#include "digitlaw/cli.hpp"

#include "digitlaw/digits.hpp"
#include "digitlaw/empirical.hpp"
#include "digitlaw/error.hpp"
#include "digitlaw/fit.hpp"
#include "digitlaw/ingest.hpp"
#include "digitlaw/lawtheory.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace digitlaw::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kMaxSweep = 10'000'000;

struct Options {
    int base = kDecimal;
    std::string output = "table";
    std::string out_path;

    // sweep
    int digit = 0;
    bool all_digits = false;
    std::uint64_t m_max = 2000;

    // analyze
    std::vector<std::string> inputs;
    std::string format = "plain";
    std::string delimiter = ",";
    std::size_t column = 1;
    std::string candidates = "benford,geom,arith";
    bool require_bounds = false;

    // bounds
    std::string dist;
    std::string probs;
};

json rational_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

json distribution_json(const DigitDistribution& d) {
    json probs = json::array();
    for (const double p : d.probabilities()) {
        probs.push_back(p);
    }
    return json{{"label", to_string(d.label())}, {"probabilities", std::move(probs)}};
}

json bounds_json(const BoundsReport& b) {
    json entries = json::array();
    for (const auto& e : b.entries) {
        entries.push_back(json{{"n", e.n.value()},
                               {"lower", rational_json(e.lower)},
                               {"p", e.p},
                               {"upper", rational_json(e.upper)},
                               {"within", e.within}});
    }
    return json{{"entries", std::move(entries)}, {"all_within", b.all_within()}};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        out.push_back(item);
    }
    return out;
}

json run_theory(const Options& opt) {
    const Base base(opt.base);
    json dists = json::array();
    for (auto label : {DistributionLabel::Benford, DistributionLabel::Geom, DistributionLabel::Arith}) {
        dists.push_back(distribution_json(theoretical_distribution(label, base)));
    }
    json limits = json::array();
    for (int n = 1; n < base.value(); ++n) {
        const Digit d(n, base);
        limits.push_back(json{{"n", n},
                              {"min", rational_json(limit_frequency(d, Extremum::Min))},
                              {"max", rational_json(limit_frequency(d, Extremum::Max))}});
    }
    return json{{"distributions", std::move(dists)}, {"limits", std::move(limits)}};
}

json sweep_digit(const Digit& n, std::uint64_t m_max) {
    json series = json::array();
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const std::uint64_t count = leading_digit_count(n, m);
        const Rational f(count, m);
        series.push_back(json{{"m", m}, {"count", count}, {"f", rational_json(f)},
                              {"value", f.to_double()}});
    }

    json extrema = json::array();
    for (unsigned k = 1;; ++k) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> locations;
        try {
            locations = extremum_locations(n, k);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Capacity) {
                throw;
            }
            break;
        }
        if (locations.empty() || locations.back().first > m_max) {
            break;
        }
        for (auto kind : {Extremum::Min, Extremum::Max}) {
            const ExtremalFrequency f = extremal_frequency(n, k, kind);
            if (f.location_m > m_max) {
                continue;
            }
            extrema.push_back(json{{"k", k}, {"kind", to_string(kind)}, {"m", f.location_m},
                                   {"f", rational_json(f.value)}, {"value", f.value.to_double()}});
        }
    }
    return json{{"n", n.value()}, {"series", std::move(series)}, {"predicted_extrema", std::move(extrema)}};
}

json run_sweep(const Options& opt) {
    const Base base(opt.base);
    if (opt.m_max < 1 || opt.m_max > kMaxSweep) {
        fail(ErrorCode::Usage, "--m-max must lie in [1, " + std::to_string(kMaxSweep) + "]");
    }
    if (!opt.all_digits && opt.digit == 0) {
        fail(ErrorCode::Usage, "sweep needs --digit <n> or --all-digits");
    }
    json digits = json::array();
    if (opt.all_digits) {
        for (int n = 1; n < base.value(); ++n) {
            digits.push_back(sweep_digit(Digit(n, base), opt.m_max));
        }
    } else {
        digits.push_back(sweep_digit(Digit(opt.digit, base), opt.m_max));
    }
    return json{{"digits", std::move(digits)}};
}

struct AnalyzeOutput {
    json result;
    json diagnostics = json::array();
    bool bounds_ok = true;
};

AnalyzeOutput run_analyze(const Options& opt, std::istream& in) {
    const Base base(opt.base);
    InputSpec spec;
    spec.format = parse_format(opt.format);
    if (opt.delimiter.size() != 1) {
        fail(ErrorCode::Usage, "--delimiter takes a single character");
    }
    spec.delimiter = opt.delimiter.front();
    spec.column = opt.column;
    spec.decimal_token_capture = base.value() == kDecimal;
    spec.validate();

    std::vector<DigitDistribution> candidates;
    for (const auto& name : split_list(opt.candidates)) {
        const DistributionLabel label = parse_label(name);
        if (label != DistributionLabel::Benford && label != DistributionLabel::Geom &&
            label != DistributionLabel::Arith) {
            fail(ErrorCode::Usage, "candidates are benford, geom, arith; got '" + name + "'");
        }
        candidates.push_back(theoretical_distribution(label, base));
    }
    if (candidates.empty()) {
        fail(ErrorCode::Usage, "--candidates is empty");
    }

    AnalyzeOutput output;
    SampleSummary summary = SampleSummary::empty(base);
    const auto ingest = [&](const std::string& source, const ParseResult& parsed) {
        for (const auto& d : parsed.diagnostics) {
            output.diagnostics.push_back(source + ":" + std::to_string(d.line) + ": " + d.message);
        }
        const auto observations = to_observations(parsed, spec.decimal_token_capture);
        summary.merge(tally(observations, base, source));
    };
    if (opt.inputs.empty()) {
        ingest("<stdin>", parse_dataset(spec, in));
    } else {
        for (const auto& path : opt.inputs) {
            std::ifstream file(path, std::ios::binary);
            if (!file) {
                fail(ErrorCode::Io, "cannot open '" + path + "'");
            }
            ingest(path, parse_dataset(spec, file));
        }
    }

    const FitReport report = compare(summary, candidates);
    const auto rationals = empirical_rationals(summary);

    json counts = json::array();
    json empirical = json::array();
    for (int n = 1; n < base.value(); ++n) {
        const Rational& p = rationals[static_cast<std::size_t>(n - 1)];
        counts.push_back(summary.count(n));
        empirical.push_back(json{{"n", n}, {"count", summary.count(n)}, {"p", rational_json(p)},
                                 {"value", p.to_double()}});
    }
    json fit = json::array();
    for (const auto& e : report.entries) {
        fit.push_back(json{{"label", e.label},
                           {"r", e.r ? json(*e.r) : json(nullptr)},
                           {"chi_square", e.chi ? json(e.chi->statistic) : json(nullptr)},
                           {"chi_square_dof", e.chi ? json(e.chi->dof) : json(nullptr)},
                           {"mad", e.mad},
                           {"max_abs_dev", e.max_abs_dev}});
    }
    output.bounds_ok = report.bounds.all_within();
    output.result = json{{"sample", json{{"source", summary.source},
                                         {"total_read", summary.total_read},
                                         {"used", summary.used},
                                         {"skipped_zero", summary.skipped_zero},
                                         {"skipped_nonfinite", summary.skipped_nonfinite},
                                         {"counts", std::move(counts)}}},
                         {"empirical", std::move(empirical)},
                         {"fit", std::move(fit)},
                         {"bounds", bounds_json(report.bounds)},
                         {"best_by_r", report.best_by_r}};
    return output;
}

json run_bounds(const Options& opt) {
    const Base base(opt.base);
    if (opt.dist.empty() == opt.probs.empty()) {
        fail(ErrorCode::Usage, "bounds needs exactly one of --dist or --probs");
    }
    std::optional<DigitDistribution> dist;
    if (!opt.dist.empty()) {
        dist = theoretical_distribution(parse_label(opt.dist), base);
    } else {
        std::vector<double> probs;
        for (const auto& item : split_list(opt.probs)) {
            const auto first = item.find_first_not_of(' ');
            const auto last = item.find_last_not_of(' ');
            const std::string trimmed =
                first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
            try {
                probs.push_back(parse_numeral(trimmed));
            } catch (const Error&) {
                fail(ErrorCode::Usage, "--probs entry '" + item + "' is not a number");
            }
        }
        dist.emplace(base, std::move(probs), DistributionLabel::Custom);
    }
    return json{{"distribution", distribution_json(*dist)}, {"bounds", bounds_json(bounds_check(*dist))}};
}

json params_json(const std::string& command, const Options& opt) {
    json p = json::object();
    if (command == "sweep") {
        if (opt.all_digits) {
            p["all_digits"] = true;
        } else {
            p["digit"] = opt.digit;
        }
        p["m_max"] = opt.m_max;
    } else if (command == "analyze") {
        p["inputs"] = opt.inputs.empty() ? json::array({"<stdin>"}) : json(opt.inputs);
        p["format"] = opt.format;
        if (opt.format == "delimited") {
            p["delimiter"] = opt.delimiter;
            p["column"] = opt.column;
        }
        p["candidates"] = split_list(opt.candidates);
        p["require_bounds"] = opt.require_bounds;
    } else if (command == "bounds") {
        if (!opt.dist.empty()) {
            p["dist"] = opt.dist;
        } else {
            p["probs"] = opt.probs;
        }
    }
    return p;
}

// --- table rendering -------------------------------------------------------

std::string sig4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%#.4g", v);
    return buf;
}

std::string frac(const json& r) {
    const auto num = r.at("num").get<std::uint64_t>();
    const auto den = r.at("den").get<std::uint64_t>();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

void table_theory(std::ostream& os, const json& result) {
    const auto& dists = result.at("distributions");
    os << pad("n", 4);
    for (const auto& d : dists) {
        os << pad(d.at("label").get<std::string>(), 10);
    }
    os << pad("f_min", 10) << "f_max\n";
    const auto& limits = result.at("limits");
    for (std::size_t i = 0; i < limits.size(); ++i) {
        os << pad(std::string(1, digit_symbol(limits[i].at("n").get<int>())), 4);
        for (const auto& d : dists) {
            os << pad(sig4(d.at("probabilities").at(i).get<double>()), 10);
        }
        os << pad(frac(limits[i].at("min")), 10) << frac(limits[i].at("max")) << '\n';
    }
}

void table_sweep(std::ostream& os, const json& result) {
    for (const auto& d : result.at("digits")) {
        os << "digit " << digit_symbol(d.at("n").get<int>()) << '\n';
        os << pad("m", 10) << pad("count", 10) << pad("f", 14) << "value\n";
        for (const auto& row : d.at("series")) {
            os << pad(std::to_string(row.at("m").get<std::uint64_t>()), 10)
               << pad(std::to_string(row.at("count").get<std::uint64_t>()), 10)
               << pad(frac(row.at("f")), 14) << sig4(row.at("value").get<double>()) << '\n';
        }
        os << "predicted extrema\n";
        os << pad("k", 4) << pad("kind", 6) << pad("m", 10) << pad("f", 14) << "value\n";
        for (const auto& e : d.at("predicted_extrema")) {
            os << pad(std::to_string(e.at("k").get<unsigned>()), 4)
               << pad(e.at("kind").get<std::string>(), 6)
               << pad(std::to_string(e.at("m").get<std::uint64_t>()), 10) << pad(frac(e.at("f")), 14)
               << sig4(e.at("value").get<double>()) << '\n';
        }
    }
}

void table_bounds(std::ostream& os, const json& bounds) {
    os << pad("n", 4) << pad("lower", 10) << pad("p", 10) << pad("upper", 10) << "within\n";
    for (const auto& e : bounds.at("entries")) {
        os << pad(std::string(1, digit_symbol(e.at("n").get<int>())), 4) << pad(frac(e.at("lower")), 10)
           << pad(sig4(e.at("p").get<double>()), 10) << pad(frac(e.at("upper")), 10)
           << (e.at("within").get<bool>() ? "yes" : "NO") << '\n';
    }
    os << "all within: " << (bounds.at("all_within").get<bool>() ? "yes" : "no") << '\n';
}

void table_analyze(std::ostream& os, const json& result) {
    const auto& s = result.at("sample");
    os << "source: " << s.at("source").get<std::string>() << '\n'
       << "read " << s.at("total_read").get<std::uint64_t>() << ", used "
       << s.at("used").get<std::uint64_t>() << ", skipped zero "
       << s.at("skipped_zero").get<std::uint64_t>() << ", skipped non-finite "
       << s.at("skipped_nonfinite").get<std::uint64_t>() << "\n\n";
    os << pad("n", 4) << pad("count", 10) << pad("p", 16) << "value\n";
    for (const auto& e : result.at("empirical")) {
        os << pad(std::string(1, digit_symbol(e.at("n").get<int>())), 4)
           << pad(std::to_string(e.at("count").get<std::uint64_t>()), 10) << pad(frac(e.at("p")), 16)
           << sig4(e.at("value").get<double>()) << '\n';
    }
    os << '\n' << pad("candidate", 11) << pad("r", 10) << pad("chi2", 12) << pad("dof", 5)
       << pad("mad", 10) << "max_dev\n";
    const auto num = [](const json& v) { return v.is_null() ? std::string("-") : sig4(v.get<double>()); };
    for (const auto& f : result.at("fit")) {
        os << pad(f.at("label").get<std::string>(), 11) << pad(num(f.at("r")), 10)
           << pad(num(f.at("chi_square")), 12)
           << pad(f.at("chi_square_dof").is_null() ? "-" : std::to_string(f.at("chi_square_dof").get<int>()), 5)
           << pad(num(f.at("mad")), 10) << num(f.at("max_abs_dev")) << '\n';
    }
    os << "best by r: " << result.at("best_by_r").get<std::string>() << "\n\n";
    table_bounds(os, result.at("bounds"));
}

int exit_code_for(ErrorCode code) {
    return code == ErrorCode::Usage || code == ErrorCode::Domain || code == ErrorCode::Parse
               ? kExitUsage
               : kExitFailure;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--base", opt.base, "Radix of the positional system")
        ->check(CLI::Range(Base::kMin, Base::kMax));
    cmd->add_option("--output", opt.output, "table or json")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
}

} // namespace

std::string render_json(const json& report) {
    return report.dump(2) + "\n";
}

std::string render_table(const json& report) {
    std::ostringstream os;
    const std::string command = report.at("command").get<std::string>();
    os << command << " (base " << report.at("base").get<int>() << ")\n\n";
    const auto& result = report.at("result");
    if (command == "theory") {
        table_theory(os, result);
    } else if (command == "sweep") {
        table_sweep(os, result);
    } else if (command == "analyze") {
        table_analyze(os, result);
    } else if (command == "bounds") {
        table_bounds(os, result.at("bounds"));
    }
    if (!report.at("diagnostics").empty()) {
        os << "\ndiagnostics:\n";
        for (const auto& d : report.at("diagnostics")) {
            os << "  " << d.get<std::string>() << '\n';
        }
    }
    return os.str();
}

CommandOutcome execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    const auto started = std::chrono::steady_clock::now();
    Options opt;
    CLI::App app{"Leading-digit law analysis", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* theory = app.add_subcommand("theory", "Benford, geometric-mean and arithmetic-mean laws");
    add_common(theory, opt);

    auto* sweep = app.add_subcommand("sweep", "Exact first-digit frequency over {1..m}");
    add_common(sweep, opt);
    auto* digit_opt = sweep->add_option("--digit", opt.digit, "Leading digit to sweep");
    auto* all_opt = sweep->add_flag("--all-digits", opt.all_digits, "Sweep every digit");
    digit_opt->excludes(all_opt);
    sweep->add_option("--m-max", opt.m_max, "Largest upper limit m");

    auto* analyze = app.add_subcommand("analyze", "Tally a dataset and score it against the laws");
    add_common(analyze, opt);
    analyze->add_option("--input", opt.inputs, "Input file (repeatable; default stdin)");
    analyze->add_option("--format", opt.format, "plain, delimited or spectrum2col")
        ->check(CLI::IsMember({"plain", "delimited", "spectrum2col"}));
    analyze->add_option("--delimiter", opt.delimiter, "Field delimiter for delimited input");
    analyze->add_option("--column", opt.column, "1-based column for delimited input")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--candidates", opt.candidates, "Comma list of benford,geom,arith");
    analyze->add_flag("--require-bounds", opt.require_bounds, "Exit nonzero on bound violations");

    auto* bounds = app.add_subcommand("bounds", "Screen a distribution against the extremal bounds");
    add_common(bounds, opt);
    auto* dist_opt = bounds->add_option("--dist", opt.dist, "benford, geom or arith")
                         ->check(CLI::IsMember({"benford", "geom", "arith"}));
    auto* probs_opt = bounds->add_option("--probs", opt.probs, "Comma list of N-1 probabilities");
    dist_opt->excludes(probs_opt);

    CommandOutcome outcome;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return outcome;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return outcome;
    } catch (const CLI::ParseError& e) {
        err << kToolName << ": " << e.what() << '\n';
        outcome.exit_code = kExitUsage;
        return outcome;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json result;
    json diagnostics = json::array();
    bool bounds_ok = true;
    try {
        if (command == "theory") {
            result = run_theory(opt);
        } else if (command == "sweep") {
            result = run_sweep(opt);
        } else if (command == "analyze") {
            AnalyzeOutput a = run_analyze(opt, in);
            result = std::move(a.result);
            diagnostics = std::move(a.diagnostics);
            bounds_ok = a.bounds_ok;
        } else {
            result = run_bounds(opt);
        }
    } catch (const Error& e) {
        err << kToolName << ": " << e.what() << '\n';
        outcome.exit_code = exit_code_for(e.code());
        return outcome;
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    outcome.report = json{{"command", command},
                          {"base", opt.base},
                          {"params", params_json(command, opt)},
                          {"result", std::move(result)},
                          {"diagnostics", std::move(diagnostics)},
                          {"meta", json{{"tool", kToolName},
                                        {"version", kVersion},
                                        {"elapsed_ms", elapsed.count()}}}};
    if (command == "analyze" && opt.require_bounds && !bounds_ok) {
        outcome.exit_code = kExitBoundsViolated;
    }

    const std::string text =
        opt.output == "json" ? render_json(outcome.report) : render_table(outcome.report);
    if (opt.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
        file << text;
        if (!file) {
            err << kToolName << ": I/O error: cannot write '" << opt.out_path << "'\n";
            outcome.exit_code = kExitFailure;
        }
    }
    return outcome;
}

} // namespace digitlaw::cli
