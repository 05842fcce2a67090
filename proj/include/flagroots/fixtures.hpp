#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagroots/flag.hpp"
#include "flagroots/rootsys.hpp"

namespace flagroots {

struct SpaceId {
    std::string name;  // F4_34, E6_36, ... or a custom "E6:1,3"
    Family family;
    std::vector<int> painted;
    bool custom = false;
};

// Accepts the five named spaces and custom specs of the form "TYPE:i,j,...".
SpaceId parse_space(std::string_view s);
std::vector<SpaceId> named_spaces();

// (module, index), both 1-based, as in "b3^3"
using Label = std::pair<int, int>;

// "b3^3 b1^1 b1..6^4"; commas and "+" are accepted as separators
std::vector<Label> parse_labels(std::string_view spec);

struct FixtureFamily {
    std::string spec;
    int group = 1;
    std::vector<Label> members;
    bool suspect = false;
    std::string note;
};

struct PairList {
    int p = 0, q = 0;
    std::vector<Label> pairs;  // (i, j): beta_i^p with beta_j^q
    std::vector<int> rows;     // rows i printed in full
    std::vector<std::pair<Label, std::string>> suspect;
    std::vector<std::string> notes;
};

struct FixtureSet {
    std::string space;
    Family family = Family::G2;
    std::vector<int> painted;
    std::string kind;
    std::vector<TRoot> troots;
    std::vector<int> dims;
    InclusionTable inclusions;  // upper bounds; 0 stands for k
    std::vector<std::vector<Coeffs>> label_map;
    std::vector<PairList> pair_lists;
    std::vector<FixtureFamily> families;
    std::vector<std::string> notes;

    bool pair_suspect(int p, int q, int i, int j) const;
};

std::filesystem::path fixture_dir();
FixtureSet load_fixture(const std::string& space, const std::optional<std::filesystem::path>& dir = std::nullopt);
FixtureSet parse_fixture(const nlohmann::json& j);

// Label -> positive root id via the fixture label map; throws InputError on bad labels.
int resolve_label(const FixtureSet& fx, const RootSystem& s, const Label& l);
std::vector<int> resolve_labels(const FixtureSet& fx, const RootSystem& s, const std::vector<Label>& ls);

}  // namespace flagroots
