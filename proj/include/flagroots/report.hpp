#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flagroots/equigeo.hpp"
#include "flagroots/fixtures.hpp"

namespace flagroots {

enum class Format { Text, Json, Latex };
Format parse_format(std::string_view s);

struct RunConfig {
    std::string command;             // roots | table | check | enumerate | verify
    SpaceId space;
    std::vector<std::string> args;   // table: which; check: family spec; verify: vector file [, metric]
    Format format = Format::Text;
    bool check = false;
    bool verify_fixtures = false;
    int min_modules = 2;
    std::optional<std::size_t> cap;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> fixtures;
};

struct Report {
    int status = 0;  // 0 match, 1 mismatch
    nlohmann::json data;
};

inline constexpr const char* kReportSchema = "flagroots.report/1";

// Throws InputError on bad input; callers map that to exit status 2.
Report run(const RunConfig& cfg);
std::string render(const Report& r, Format f);

// Family given as beta labels ("b3^3 b1^1") or as coefficient vectors ("(0,1,1,0) (1,1,1,1)").
std::vector<int> parse_family_spec(const FlagSpace& fs, const FixtureSet* fx, std::string_view spec);

// {"A":[{"root":[..]|"label":"b3^3", "coeff":"p/q"}], "B":[...]}
Element tangent_from_json(const FlagSpace& fs, const FixtureSet* fx, const nlohmann::json& j);

MetricVector parse_metric(std::string_view s, int nmodules);

// Compact label form for a set of positive ids, e.g. "b1^6 b1..6^1".
std::string family_label(const FlagSpace& fs, const FixtureSet* fx, const std::vector<int>& ids);

std::string coeff_string(const Coeffs& c);

}  // namespace flagroots
