#pragma once

// Command-line front end for the patrol detection toolkit. Kept header-only
// so the test suite can drive it in-process.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "patrol/patrol.hpp"

namespace patrol::cli {

inline constexpr char const* kToolName = "patrolsim";
inline constexpr char const* kToolVersion = "0.1.0";

/// Above this r/R the small-parameter closed forms are flagged.
inline constexpr double kLargeRatioThreshold = 0.2;

enum ExitCode : int { kOk = 0, kValidation = 1, kUsage = 2 };

/// Thrown for grammar problems discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form.
inline std::string number(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(x);
}

/// One estimator's output; unset fields become empty CSV cells and are
/// omitted from JSON.
struct EstimatorResult {
    std::string estimator;
    double probability = 0.0;
    std::optional<EstimateWithCI> mc;
    std::optional<AsymptoticSummary> asymptotic;
    std::optional<int> resolution;
};

inline nlohmann::json to_json(EstimatorResult const& r) {
    nlohmann::json j{{"estimator", r.estimator}, {"probability", r.probability}};
    if (r.mc) {
        j["ci_low"] = r.mc->ci_low;
        j["ci_high"] = r.mc->ci_high;
        j["std_error"] = r.mc->std_error;
        j["trials"] = r.mc->trials;
        j["successes"] = r.mc->successes;
    }
    if (r.asymptotic) {
        j["chord_l"] = r.asymptotic->chord_l;
        j["coverage"] = r.asymptotic->coverage;
        j["m_min"] = r.asymptotic->m_min;
    }
    if (r.resolution) j["resolution"] = *r.resolution;
    return j;
}

inline constexpr char const* kCsvHeader =
    "estimator,probability,ci_low,ci_high,m_min,chord_l,trials,seed";

inline std::string csv_cells(EstimatorResult const& r, std::optional<std::uint64_t> seed) {
    std::ostringstream os;
    os << r.estimator << ',' << number(r.probability) << ',';
    if (r.mc) os << number(r.mc->ci_low);
    os << ',';
    if (r.mc) os << number(r.mc->ci_high);
    os << ',';
    if (r.asymptotic) os << r.asymptotic->m_min;
    os << ',';
    if (r.asymptotic) os << number(r.asymptotic->chord_l);
    os << ',';
    if (r.mc) os << r.mc->trials;
    os << ',';
    if (r.mc && seed) os << *seed;
    return os.str();
}

/// Self-describing result of one subcommand.
struct RunReport {
    std::string command;
    nlohmann::json scenario;
    std::vector<EstimatorResult> results;
    std::optional<std::uint64_t> seed;
    nlohmann::json extra = nlohmann::json::object();
    std::vector<std::string> warnings;
    std::optional<double> timing_s;
};

inline nlohmann::json to_json(RunReport const& rep) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = rep.command;
    j["scenario"] = rep.scenario;
    j["results"] = nlohmann::json::array();
    for (auto const& r : rep.results) j["results"].push_back(to_json(r));
    if (rep.seed) j["seed"] = *rep.seed;
    for (auto const& [k, v] : rep.extra.items()) j[k] = v;
    j["warnings"] = rep.warnings;
    if (rep.timing_s) j["timing_s"] = *rep.timing_s;
    return j;
}

inline void write_report(RunReport const& rep, std::string const& format, std::ostream& out) {
    if (format == "csv") {
        out << "# " << rep.command << " scenario " << rep.scenario.dump() << '\n';
        for (auto const& w : rep.warnings) out << "# warning: " << w << '\n';
        out << kCsvHeader << '\n';
        for (auto const& r : rep.results) out << csv_cells(r, rep.seed) << '\n';
    } else {
        out << to_json(rep).dump(2) << '\n';
    }
}

inline EstimatorResult mc_result(EstimateWithCI const& e) {
    return {"mc", e.mean, e, std::nullopt, std::nullopt};
}

inline EstimatorResult asymptotic_result(AsymptoticSummary const& a) {
    return {"asymptotic", a.p_asym, std::nullopt, a, std::nullopt};
}

inline EstimatorResult exact_result(double p, int resolution) {
    return {"exact", p, std::nullopt, std::nullopt, resolution};
}

inline std::vector<std::string> ratio_warnings(double r_over_R) {
    if (r_over_R > kLargeRatioThreshold) {
        return {"large-parameter regime: r/R = " + number(r_over_R) +
                " exceeds 0.2, small-parameter closed forms degrade"};
    }
    return {};
}

/// Compares exact, Monte Carlo and asymptotic estimates on one circular
/// scenario.
inline RunReport compare(CircularPatrolScenario const& s, std::uint64_t trials, std::uint64_t seed,
                         int resolution, unsigned workers) {
    RunReport rep;
    rep.command = "compare";
    rep.scenario = patrol::to_json(s);
    rep.seed = seed;
    double const exact = exact_probability(s, resolution, workers);
    auto const mc = mc_probability(s, trials, seed, workers);
    auto const asym = asymptotic_summary(s);
    rep.results = {asymptotic_result(asym), exact_result(exact, resolution), mc_result(mc)};
    rep.extra["gap_exact_asymptotic"] = std::abs(exact - asym.p_asym);
    rep.extra["exact_in_mc_ci"] = mc.contains(exact);
    rep.extra["large_parameter_regime"] = s.r_over_R() > kLargeRatioThreshold;
    rep.warnings = ratio_warnings(s.r_over_R());
    return rep;
}

/// Parameter sweep request.
struct SweepSpec {
    std::string parameter;  // n | r | R | v | u
    std::vector<double> values;
    std::vector<std::string> estimators;  // exact | mc | asymptotic
};

/// Linear or log grid from "start:stop:steps".
inline std::vector<double> parse_range(std::string const& text, bool log_scale) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        try {
            parts.push_back(std::stod(item));
        } catch (std::exception const&) {
            throw UsageError("--range expects start:stop:steps");
        }
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2])) {
        throw UsageError("--range expects start:stop:steps with integer steps >= 1");
    }
    auto const steps = static_cast<int>(parts[2]);
    double const a = parts[0];
    double const b = parts[1];
    if (log_scale && !(a > 0 && b > 0)) throw UsageError("--log requires positive range bounds");
    std::vector<double> out;
    for (int k = 0; k < steps; ++k) {
        double const f = steps == 1 ? 0.0 : static_cast<double>(k) / (steps - 1);
        out.push_back(log_scale ? std::exp(std::log(a) + f * (std::log(b) - std::log(a)))
                                : a + f * (b - a));
    }
    return out;
}

inline void assign_parameter(ScenarioFields& f, std::string const& parameter, double value) {
    if (parameter == "n") {
        if (value != std::floor(value)) throw ValidationError("n", "n must be an integer");
        f.n = static_cast<int>(value);
    } else if (parameter == "r") {
        f.r = value;
    } else if (parameter == "R") {
        f.R = value;
    } else if (parameter == "v") {
        f.v = value;
    } else if (parameter == "u") {
        f.u = value;
    } else {
        throw UsageError("--param must be one of n, r, R, v, u");
    }
}

inline constexpr char const* kSweepHeader =
    "parameter,value,estimator,probability,ci_low,ci_high,m_min,chord_l,trials,seed";

/// CSV table: one row per value per estimator, ordered by value then
/// estimator name. All substituted scenarios are validated before any
/// output is produced.
inline void sweep(SweepSpec spec, ScenarioFields const& base, std::uint64_t trials,
                  std::uint64_t seed, int resolution, unsigned workers, std::ostream& out) {
    if (spec.values.empty()) throw UsageError("sweep needs at least one value");
    if (spec.estimators.empty()) throw UsageError("sweep needs at least one estimator");
    std::sort(spec.estimators.begin(), spec.estimators.end());
    spec.estimators.erase(std::unique(spec.estimators.begin(), spec.estimators.end()),
                          spec.estimators.end());
    ScenarioKind const kind = base.kind.value_or(ScenarioKind::circular);
    for (auto const& e : spec.estimators) {
        if (e != "exact" && e != "mc" && e != "asymptotic") {
            throw UsageError("unknown estimator \"" + e + "\"");
        }
        if (e == "exact" && kind == ScenarioKind::linear) {
            throw UsageError("estimator \"exact\" is only available for circular scenarios");
        }
    }
    std::sort(spec.values.begin(), spec.values.end());

    std::vector<ScenarioFields> points;
    for (double value : spec.values) {
        ScenarioFields f = base;
        f.kind = kind;
        assign_parameter(f, spec.parameter, value);
        if (kind == ScenarioKind::circular) {
            (void)f.circular();
        } else {
            (void)f.linear();
        }
        points.push_back(f);
    }

    nlohmann::json echo = kind == ScenarioKind::circular ? nlohmann::json(patrol::to_json(points[0].circular()))
                                                         : nlohmann::json(patrol::to_json(points[0].linear()));
    echo.erase(spec.parameter);
    out << "# sweep base scenario " << echo.dump() << '\n';
    out << kSweepHeader << '\n';
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (auto const& e : spec.estimators) {
            EstimatorResult r;
            if (kind == ScenarioKind::circular) {
                auto const s = points[k].circular();
                if (e == "exact") r = exact_result(exact_probability(s, resolution, workers), resolution);
                if (e == "mc") r = mc_result(mc_probability(s, trials, seed, workers));
                if (e == "asymptotic") r = asymptotic_result(asymptotic_summary(s));
            } else {
                auto const s = points[k].linear();
                if (e == "mc") r = mc_result(mc_probability_linear(s, trials, seed, workers));
                if (e == "asymptotic") r = asymptotic_result(asymptotic_summary_linear(s));
            }
            out << spec.parameter << ',' << number(spec.values[k]) << ',' << csv_cells(r, seed) << '\n';
        }
    }
}

/// Scenario flags shared by every scenario-driven subcommand.
struct ScenarioFlags {
    std::string file;
    double R = 0, r = 0, v = 0, u = 0;
    int n = 0;
    CLI::Option* opt_R = nullptr;
    CLI::Option* opt_r = nullptr;
    CLI::Option* opt_n = nullptr;
    CLI::Option* opt_v = nullptr;
    CLI::Option* opt_u = nullptr;

    void attach(CLI::App* app) {
        app->add_option("--scenario", file, "Scenario JSON file")->check(CLI::ExistingFile);
        opt_R = app->add_option("--R", R, "Patrol radius / segment length");
        opt_r = app->add_option("--r", r, "Scan radius");
        opt_n = app->add_option("--n", n, "Number of vehicles");
        opt_v = app->add_option("--v", v, "Vehicle speed");
        opt_u = app->add_option("--u", u, "Intruder speed");
    }

    /// File fields first, inline flags on top.
    [[nodiscard]] ScenarioFields resolve(ScenarioKind kind) const {
        ScenarioFields f;
        if (!file.empty()) f = load_scenario_fields(file);
        if (f.kind && *f.kind != kind) {
            throw ValidationError("kind", std::string("scenario kind must be \"") + to_string(kind) + "\"");
        }
        ScenarioFields inline_flags;
        if (opt_R->count()) inline_flags.R = R;
        if (opt_r->count()) inline_flags.r = r;
        if (opt_n->count()) inline_flags.n = n;
        if (opt_v->count()) inline_flags.v = v;
        if (opt_u->count()) inline_flags.u = u;
        f.override_with(inline_flags);
        f.kind = kind;
        return f;
    }
};

struct RunFlags {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = kDefaultSeed;
    int resolution = kDefaultResolution;
    unsigned workers = 0;
    std::string format = "json";
    bool no_timing = false;

    void attach(CLI::App* app, bool monte_carlo, bool resolution_flag) {
        if (monte_carlo) {
            app->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
            app->add_option("--seed", seed, "Root seed");
            app->add_option("--workers", workers, "Worker threads (0 = all cores)");
        }
        if (resolution_flag) {
            app->add_option("--resolution", resolution, "Starting-angle grid size")
                ->check(CLI::Range(16, 1 << 24));
        }
        app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        app->add_flag("--no-timing", no_timing, "Omit the timing field");
    }
};

inline std::vector<std::string> split_list(std::string const& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// Runs the tool with argv-style arguments (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detection probability of a radially approaching intruder by patrolling sensors",
                 kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // buffon
    NeedleProblem needle{1.0, 1.0};
    RunFlags buffon_flags;
    auto* buffon = app.add_subcommand("buffon", "Classical Buffon needle: closed form and Monte Carlo");
    buffon->add_option("--l", needle.length, "Needle length");
    buffon->add_option("--L", needle.spacing, "Line spacing");
    buffon_flags.attach(buffon, true, false);

    // circular {exact|mc|asymptotic}
    auto* circular = app.add_subcommand("circular", "Fleet patrolling a circle");
    circular->require_subcommand(1);
    ScenarioFlags c_exact_s, c_mc_s, c_asym_s;
    RunFlags c_exact_f, c_mc_f, c_asym_f;
    std::string arcs_file;
    auto* c_exact = circular->add_subcommand("exact", "Exact probability from detection arcs");
    c_exact_s.attach(c_exact);
    c_exact_f.attach(c_exact, false, true);
    c_exact->add_option("--workers", c_exact_f.workers, "Worker threads (0 = all cores)");
    c_exact->add_option("--arcs", arcs_file, "Write the union of detection arcs as CSV");
    auto* c_mc = circular->add_subcommand("mc", "Monte Carlo estimate");
    c_mc_s.attach(c_mc);
    c_mc_f.attach(c_mc, true, false);
    auto* c_asym = circular->add_subcommand("asymptotic", "Small r/R closed forms");
    c_asym_s.attach(c_asym);
    c_asym_f.attach(c_asym, false, false);

    // linear {mc|asymptotic}
    auto* linear = app.add_subcommand("linear", "Back-and-forth patrol of a segment");
    linear->require_subcommand(1);
    ScenarioFlags l_mc_s, l_asym_s;
    RunFlags l_mc_f, l_asym_f;
    auto* l_mc = linear->add_subcommand("mc", "Monte Carlo estimate");
    l_mc_s.attach(l_mc);
    l_mc_f.attach(l_mc, true, false);
    auto* l_asym = linear->add_subcommand("asymptotic", "Small r/R closed forms");
    l_asym_s.attach(l_asym);
    l_asym_f.attach(l_asym, false, false);

    // jensen
    ScenarioFlags j_s;
    RunFlags j_f;
    j_f.trials = 0;
    std::string dist_file;
    auto* jensen = app.add_subcommand("jensen", "Randomized patrol radius kR");
    jensen->add_option("--dist", dist_file, "Distribution JSON {\"atoms\": [[k, p], ...]}")
        ->required()
        ->check(CLI::ExistingFile);
    j_s.attach(jensen);
    jensen->add_option("--trials", j_f.trials, "Monte Carlo trials (0 skips the simulation)");
    jensen->add_option("--seed", j_f.seed, "Root seed");
    jensen->add_option("--workers", j_f.workers, "Worker threads (0 = all cores)");
    jensen->add_option("--format", j_f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    jensen->add_flag("--no-timing", j_f.no_timing, "Omit the timing field");

    // sweep
    ScenarioFlags sw_s;
    RunFlags sw_f;
    std::string sw_kind = "circular";
    std::string sw_param;
    std::string sw_values;
    std::string sw_range;
    bool sw_log = false;
    std::string sw_estimators = "asymptotic";
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep, CSV output");
    sw_s.attach(sweep_cmd);
    sweep_cmd->add_option("--kind", sw_kind, "Scenario kind")->check(CLI::IsMember({"circular", "linear"}));
    sweep_cmd->add_option("--param", sw_param, "Swept parameter")
        ->required()
        ->check(CLI::IsMember({"n", "r", "R", "v", "u"}));
    auto* values_opt = sweep_cmd->add_option("--values", sw_values, "Comma-separated values");
    auto* range_opt = sweep_cmd->add_option("--range", sw_range, "start:stop:steps");
    values_opt->excludes(range_opt);
    sweep_cmd->add_flag("--log", sw_log, "Logarithmic --range grid");
    sweep_cmd->add_option("--estimators", sw_estimators, "Comma-separated: exact,mc,asymptotic");
    sweep_cmd->add_option("--trials", sw_f.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--seed", sw_f.seed, "Root seed");
    sweep_cmd->add_option("--workers", sw_f.workers, "Worker threads (0 = all cores)");
    sweep_cmd->add_option("--resolution", sw_f.resolution, "Starting-angle grid size")
        ->check(CLI::Range(16, 1 << 24));
    sweep_cmd->add_flag("--no-timing", sw_f.no_timing, "Accepted for symmetry; sweeps carry no timing");

    // compare
    ScenarioFlags cmp_s;
    RunFlags cmp_f;
    auto* compare_cmd = app.add_subcommand("compare", "Exact vs Monte Carlo vs asymptotic");
    cmp_s.attach(compare_cmd);
    cmp_f.attach(compare_cmd, true, true);

    // polar-image
    double ratio = 0.1;
    int points = 360;
    auto* polar = app.add_subcommand("polar-image", "Scan circle in normalized polar coordinates, CSV");
    polar->add_option("--ratio", ratio, "r / R")->check(CLI::Range(0.0, 1.0));
    polar->add_option("--points", points, "Number of psi samples")->check(CLI::Range(2, 10000000));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::CallForVersion const&) {
        out << kToolVersion << '\n';
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    using clock = std::chrono::steady_clock;
    auto timed = [](RunReport& rep, RunFlags const& f, clock::time_point start) {
        if (!f.no_timing) rep.timing_s = std::chrono::duration<double>(clock::now() - start).count();
    };

    try {
        auto const start = clock::now();
        if (buffon->parsed()) {
            RunReport rep;
            rep.command = "buffon";
            rep.scenario = {{"l", needle.length}, {"L", needle.spacing}};
            rep.seed = buffon_flags.seed;
            double const analytic = buffon_probability(needle);
            auto const mc = buffon_mc(needle, buffon_flags.trials, buffon_flags.seed, buffon_flags.workers);
            rep.results = {{"analytic", analytic, std::nullopt, std::nullopt, std::nullopt}, mc_result(mc)};
            rep.extra["analytic_in_mc_ci"] = mc.contains(analytic);
            timed(rep, buffon_flags, start);
            write_report(rep, buffon_flags.format, out);
        } else if (c_exact->parsed()) {
            auto const s = c_exact_s.resolve(ScenarioKind::circular).circular();
            RunReport rep;
            rep.command = "circular exact";
            rep.scenario = patrol::to_json(s);
            auto const set = fleet_detection_set(s, c_exact_f.resolution, c_exact_f.workers);
            rep.results = {exact_result(set.measure() / kTwoPi, c_exact_f.resolution)};
            rep.extra["arc_count"] = set.arcs().size();
            rep.warnings = ratio_warnings(s.r_over_R());
            if (!arcs_file.empty()) {
                std::ofstream arcs(arcs_file);
                if (!arcs) throw ValidationError("arcs", "cannot write " + arcs_file);
                arcs << "start_rad,end_rad\n";
                for (auto const& a : set.arcs()) arcs << number(a.start) << ',' << number(a.end) << '\n';
            }
            timed(rep, c_exact_f, start);
            write_report(rep, c_exact_f.format, out);
        } else if (c_mc->parsed()) {
            auto const s = c_mc_s.resolve(ScenarioKind::circular).circular();
            RunReport rep;
            rep.command = "circular mc";
            rep.scenario = patrol::to_json(s);
            rep.seed = c_mc_f.seed;
            rep.results = {mc_result(mc_probability(s, c_mc_f.trials, c_mc_f.seed, c_mc_f.workers))};
            rep.warnings = ratio_warnings(s.r_over_R());
            timed(rep, c_mc_f, start);
            write_report(rep, c_mc_f.format, out);
        } else if (c_asym->parsed()) {
            auto const s = c_asym_s.resolve(ScenarioKind::circular).circular();
            RunReport rep;
            rep.command = "circular asymptotic";
            rep.scenario = patrol::to_json(s);
            rep.results = {asymptotic_result(asymptotic_summary(s))};
            rep.warnings = ratio_warnings(s.r_over_R());
            timed(rep, c_asym_f, start);
            write_report(rep, c_asym_f.format, out);
        } else if (l_mc->parsed()) {
            auto const s = l_mc_s.resolve(ScenarioKind::linear).linear();
            RunReport rep;
            rep.command = "linear mc";
            rep.scenario = patrol::to_json(s);
            rep.seed = l_mc_f.seed;
            rep.results = {mc_result(mc_probability_linear(s, l_mc_f.trials, l_mc_f.seed, l_mc_f.workers))};
            rep.warnings = ratio_warnings(s.scan_radius / s.segment_length);
            timed(rep, l_mc_f, start);
            write_report(rep, l_mc_f.format, out);
        } else if (l_asym->parsed()) {
            auto const s = l_asym_s.resolve(ScenarioKind::linear).linear();
            RunReport rep;
            rep.command = "linear asymptotic";
            rep.scenario = patrol::to_json(s);
            rep.results = {asymptotic_result(asymptotic_summary_linear(s))};
            rep.warnings = ratio_warnings(s.scan_radius / s.segment_length);
            timed(rep, l_asym_f, start);
            write_report(rep, l_asym_f.format, out);
        } else if (jensen->parsed()) {
            auto const d = load_distribution(dist_file);
            auto const s = j_s.resolve(ScenarioKind::circular).circular();
            auto const sides = jensen_sides(d, s.scan_radius, s.patrol_radius);
            RunReport rep;
            rep.command = "jensen";
            rep.scenario = patrol::to_json(s);
            nlohmann::json atoms = nlohmann::json::array();
            for (auto const& a : d.atoms()) atoms.push_back({a.k, a.weight});
            rep.extra["distribution"] = {{"atoms", atoms}, {"k_minus", d.k_minus()}, {"k_plus", d.k_plus()}};
            rep.extra["jensen"] = {{"lhs", sides.lhs}, {"rhs", sides.rhs}, {"ratio", sides.lhs / sides.rhs}};
            auto asym = asymptotic_summary(s);
            rep.results = {asymptotic_result(asym)};
            rep.results.push_back({"asymptotic_randomized", asymptotic_probability_randomized(s, d),
                                   std::nullopt, std::nullopt, std::nullopt});
            if (j_f.trials > 0) {
                rep.seed = j_f.seed;
                auto r = mc_result(mc_probability_random_radius(s, d, j_f.trials, j_f.seed, j_f.workers));
                r.estimator = "mc_randomized";
                rep.results.push_back(r);
            }
            rep.warnings = ratio_warnings(s.r_over_R());
            timed(rep, j_f, start);
            write_report(rep, j_f.format, out);
        } else if (sweep_cmd->parsed()) {
            ScenarioKind const kind = sw_kind == "linear" ? ScenarioKind::linear : ScenarioKind::circular;
            ScenarioFields base = sw_s.resolve(kind);
            SweepSpec spec;
            spec.parameter = sw_param;
            if (range_opt->count()) {
                spec.values = parse_range(sw_range, sw_log);
            } else if (values_opt->count()) {
                for (auto const& item : split_list(sw_values)) {
                    try {
                        spec.values.push_back(std::stod(item));
                    } catch (std::exception const&) {
                        throw UsageError("--values expects numbers, got \"" + item + "\"");
                    }
                }
            } else {
                throw UsageError("sweep requires --values or --range");
            }
            spec.estimators = split_list(sw_estimators);
            sweep(spec, base, sw_f.trials, sw_f.seed, sw_f.resolution, sw_f.workers, out);
        } else if (compare_cmd->parsed()) {
            auto const s = cmp_s.resolve(ScenarioKind::circular).circular();
            RunReport rep = compare(s, cmp_f.trials, cmp_f.seed, cmp_f.resolution, cmp_f.workers);
            timed(rep, cmp_f, start);
            write_report(rep, cmp_f.format, out);
        } else if (polar->parsed()) {
            if (!(ratio > 0.0 && ratio < 1.0)) throw ValidationError("ratio", "0 < r/R < 1 required");
            out << "# polar-image r_over_R " << number(ratio) << '\n';
            out << "psi,rho_exact,phi_exact,rho_approx,phi_approx\n";
            for (int k = 0; k < points; ++k) {
                double const psi = kTwoPi * k / points;
                auto const e = scan_circle_polar_exact(ratio, psi);
                auto const a = scan_circle_polar_approx(ratio, psi);
                out << number(psi) << ',' << number(e.rho_norm) << ',' << number(e.phi) << ','
                    << number(a.rho_norm) << ',' << number(a.phi) << '\n';
            }
        }
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (ValidationError const& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (std::domain_error const& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}

}  // namespace patrol::cli
