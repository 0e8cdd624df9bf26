#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "patrol/randomized_radius.hpp"
#include "patrol/scenario.hpp"

namespace patrol {

enum class ScenarioKind { circular, linear };

[[nodiscard]] inline char const* to_string(ScenarioKind k) noexcept {
    return k == ScenarioKind::circular ? "circular" : "linear";
}

/// Scenario fields as read from a file or flags; any of them may be missing
/// until sources are merged.
struct ScenarioFields {
    std::optional<ScenarioKind> kind;
    std::optional<double> R, r, v, u;
    std::optional<int> n;

    /// Fields set in `other` replace ours.
    void override_with(ScenarioFields const& other) {
        if (other.kind) kind = other.kind;
        if (other.R) R = other.R;
        if (other.r) r = other.r;
        if (other.n) n = other.n;
        if (other.v) v = other.v;
        if (other.u) u = other.u;
    }

    [[nodiscard]] CircularPatrolScenario circular() const {
        require_kind(ScenarioKind::circular);
        return validate(CircularPatrolScenario{need(R, "R"), need(r, "r"), need(n, "n"), need(v, "v"),
                                               need(u, "u")});
    }

    [[nodiscard]] LinearPatrolScenario linear() const {
        require_kind(ScenarioKind::linear);
        return validate(LinearPatrolScenario{need(R, "R"), need(r, "r"), need(n, "n"), need(v, "v"),
                                             need(u, "u")});
    }

private:
    template <class T>
    static T need(std::optional<T> const& value, char const* field) {
        if (!value) throw ValidationError(field, std::string("missing field ") + field);
        return *value;
    }

    void require_kind(ScenarioKind expected) const {
        if (kind && *kind != expected) {
            throw ValidationError("kind", std::string("scenario kind must be \"") + to_string(expected) + "\"");
        }
    }
};

namespace detail {

inline double json_number(nlohmann::json const& j, char const* field) {
    if (!j.is_number()) throw ValidationError(field, std::string(field) + " must be a number");
    return j.get<double>();
}

inline int json_count(nlohmann::json const& j, char const* field) {
    double const x = json_number(j, field);
    if (x != std::floor(x) || std::abs(x) > 1e9) {
        throw ValidationError(field, std::string(field) + " must be an integer");
    }
    return static_cast<int>(x);
}

inline nlohmann::json parse_json_text(std::string const& text, char const* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
        throw ValidationError(what, std::string("malformed ") + what + " JSON: " + e.what());
    }
}

inline std::string read_file(std::string const& path, char const* what) {
    std::ifstream in(path);
    if (!in) throw ValidationError(what, std::string("cannot open ") + what + " file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace detail

/// Scenario object: {"kind": "circular"|"linear", "R", "r", "n", "v", "u"}.
/// Unknown keys are rejected.
[[nodiscard]] inline ScenarioFields scenario_fields_from_json(nlohmann::json const& j) {
    if (!j.is_object()) throw ValidationError("scenario", "scenario must be a JSON object");
    ScenarioFields f;
    for (auto const& [key, value] : j.items()) {
        if (key == "kind") {
            if (value == "circular") {
                f.kind = ScenarioKind::circular;
            } else if (value == "linear") {
                f.kind = ScenarioKind::linear;
            } else {
                throw ValidationError("kind", "kind must be \"circular\" or \"linear\"");
            }
        } else if (key == "R") {
            f.R = detail::json_number(value, "R");
        } else if (key == "r") {
            f.r = detail::json_number(value, "r");
        } else if (key == "n") {
            f.n = detail::json_count(value, "n");
        } else if (key == "v") {
            f.v = detail::json_number(value, "v");
        } else if (key == "u") {
            f.u = detail::json_number(value, "u");
        } else {
            throw ValidationError(key, "unknown scenario key \"" + key + "\"");
        }
    }
    return f;
}

[[nodiscard]] inline ScenarioFields load_scenario_fields(std::string const& path) {
    return scenario_fields_from_json(detail::parse_json_text(detail::read_file(path, "scenario"), "scenario"));
}

[[nodiscard]] inline nlohmann::json to_json(CircularPatrolScenario const& s) {
    return {{"kind", "circular"}, {"R", s.patrol_radius}, {"r", s.scan_radius},
            {"n", s.vehicles},    {"v", s.vehicle_speed}, {"u", s.intruder_speed}};
}

[[nodiscard]] inline nlohmann::json to_json(LinearPatrolScenario const& s) {
    return {{"kind", "linear"}, {"R", s.segment_length}, {"r", s.scan_radius},
            {"n", s.vehicles},  {"v", s.vehicle_speed},  {"u", s.intruder_speed}};
}

/// Distribution object: {"atoms": [[k, p], ...]}, optionally with
/// "k_minus" and "k_plus".
[[nodiscard]] inline RadiusDistribution distribution_from_json(nlohmann::json const& j) {
    if (!j.is_object()) throw ValidationError("atoms", "distribution must be a JSON object");
    std::vector<RadiusAtom> atoms;
    std::optional<double> k_minus;
    std::optional<double> k_plus;
    for (auto const& [key, value] : j.items()) {
        if (key == "atoms") {
            if (!value.is_array()) throw ValidationError("atoms", "atoms must be an array of [k, p] pairs");
            for (auto const& pair : value) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw ValidationError("atoms", "atoms must be an array of [k, p] pairs");
                }
                atoms.push_back({detail::json_number(pair[0], "k"), detail::json_number(pair[1], "p")});
            }
        } else if (key == "k_minus") {
            k_minus = detail::json_number(value, "k_minus");
        } else if (key == "k_plus") {
            k_plus = detail::json_number(value, "k_plus");
        } else {
            throw ValidationError(key, "unknown distribution key \"" + key + "\"");
        }
    }
    return RadiusDistribution(std::move(atoms), k_minus, k_plus);
}

[[nodiscard]] inline RadiusDistribution load_distribution(std::string const& path) {
    return distribution_from_json(
        detail::parse_json_text(detail::read_file(path, "distribution"), "distribution"));
}

}  // namespace patrol
