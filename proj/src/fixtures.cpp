#include "flagroots/fixtures.hpp"

#include <cstdlib>
#include <fstream>

namespace flagroots {

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("FLAGROOTS_FIXTURES"); env && *env) return env;
    return FLAGROOTS_FIXTURE_DIR;
}

bool FixtureSet::pair_suspect(int p, int q, int i, int j) const {
    for (auto& pl : pair_lists) {
        if (pl.p != p || pl.q != q) continue;
        for (auto& [l, why] : pl.suspect)
            if (l == Label{i, j}) return true;
    }
    return false;
}

namespace {

std::vector<Label> labels(const nlohmann::json& j) {
    std::vector<Label> out;
    for (auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

}  // namespace

FixtureSet parse_fixture(const nlohmann::json& j) {
    FixtureSet fx;
    try {
        fx.space = j.at("space").get<std::string>();
        auto fam = parse_family(j.at("type").get<std::string>());
        if (!fam) throw InputError("fixture has unknown type");
        fx.family = *fam;
        fx.painted = j.at("painted").get<std::vector<int>>();
        fx.kind = j.value("kind", "");
        fx.troots = j.value("troots", std::vector<TRoot>{});
        fx.dims = j.value("dims", std::vector<int>{});
        if (j.contains("inclusions")) {
            int m = static_cast<int>(fx.troots.size());
            fx.inclusions.assign(m, std::vector<std::set<int>>(m));
            for (auto& e : j.at("inclusions")) {
                int a = e.at("pair").at(0).get<int>(), b = e.at("pair").at(1).get<int>();
                std::set<int> t;
                for (auto& x : e.at("targets")) t.insert(x.is_string() ? 0 : x.get<int>());
                fx.inclusions.at(a - 1).at(b - 1) = t;
                fx.inclusions.at(b - 1).at(a - 1) = t;
            }
        }
        fx.label_map = j.at("label_map").get<std::vector<std::vector<Coeffs>>>();
        for (auto& e : j.value("pair_lists", nlohmann::json::array())) {
            PairList pl;
            pl.p = e.at("modules").at(0).get<int>();
            pl.q = e.at("modules").at(1).get<int>();
            pl.pairs = labels(e.at("pairs"));
            pl.rows = e.value("rows", std::vector<int>{});
            for (auto& s : e.value("suspect", nlohmann::json::array()))
                pl.suspect.push_back({{s.at(0).get<int>(), s.at(1).get<int>()}, s.at(2).get<std::string>()});
            pl.notes = e.value("notes", std::vector<std::string>{});
            fx.pair_lists.push_back(std::move(pl));
        }
        for (auto& e : j.value("families", nlohmann::json::array())) {
            FixtureFamily f;
            f.spec = e.at("spec").get<std::string>();
            f.group = e.value("group", 1);
            f.members = labels(e.at("members"));
            f.suspect = e.value("suspect", false);
            f.note = e.value("note", "");
            fx.families.push_back(std::move(f));
        }
        fx.notes = j.value("notes", std::vector<std::string>{});
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed fixture: ") + ex.what());
    }
    return fx;
}

FixtureSet load_fixture(const std::string& space, const std::optional<std::filesystem::path>& dir) {
    std::filesystem::path p = (dir ? *dir : fixture_dir()) / (space + ".json");
    std::ifstream in(p);
    if (!in) throw InputError("cannot open fixture " + p.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError("cannot parse fixture " + p.string() + ": " + ex.what());
    }
    return parse_fixture(j);
}

int resolve_label(const FixtureSet& fx, const RootSystem& s, const Label& l) {
    auto [m, i] = l;
    if (m < 1 || m > static_cast<int>(fx.label_map.size()))
        throw InputError("label b" + std::to_string(i) + "^" + std::to_string(m) + ": no such module");
    const auto& fiber = fx.label_map[m - 1];
    if (i < 1 || i > static_cast<int>(fiber.size()))
        throw InputError("label b" + std::to_string(i) + "^" + std::to_string(m) + ": index out of range");
    int id = s.find(fiber[i - 1]);
    if (id < 0 || !s.positive(id)) throw InputError("fixture root is not a positive root");
    return id;
}

std::vector<int> resolve_labels(const FixtureSet& fx, const RootSystem& s, const std::vector<Label>& ls) {
    std::vector<int> out;
    for (auto& l : ls) out.push_back(resolve_label(fx, s, l));
    return out;
}

}  // namespace flagroots
