#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace flagroots;

namespace {

int label(const std::string& space, const std::string& l) {
    return resolve_label(support::fixture(space), support::space(space).sys(), parse_labels(l).at(0));
}

std::set<std::set<Coeffs>> as_sets(const FlagSpace& fs, const EnumResult& r) {
    std::set<std::set<Coeffs>> out;
    for (auto& f : r.families) {
        std::set<Coeffs> c;
        for (int id : f) c.insert(fs.sys().coeffs(id));
        out.insert(c);
    }
    return out;
}

oracle::Space oracle_space(const std::string& name) {
    const FlagSpace& fs = support::space(name);
    return oracle::space(fs.sys().family(), fs.pd.painted, fs.cls.kind == G2Kind::TypeI ? oracle::kTypeI : oracle::kTypeII);
}

}  // namespace

TEST_CASE("pair compatibility examples") {
    const FlagSpace& fs = support::space("F4_34");
    CHECK(pair_compatible(fs, label("F4_34", "b1^1"), label("F4_34", "b3^3")));
    CHECK_FALSE(pair_compatible(fs, label("F4_34", "b1^1"), label("F4_34", "b1^3")));
    for (auto& m : fs.modules)
        for (int a : m.roots)
            for (int b : m.roots) CHECK(pair_compatible(fs, a, b));
    CHECK_THROWS_AS(pair_compatible(fs, fs.pd.rk_pos[0], fs.pd.rm_pos[0]), InputError);
    CHECK_THROWS_AS(pair_compatible(fs, -1, fs.pd.rm_pos[0]), InputError);
}

TEST_CASE("structural family examples") {
    const FlagSpace& fs = support::space("F4_34");
    auto ids = resolve_labels(support::fixture("F4_34"), fs.sys(), parse_labels("b3^3 b1^1 b6^1"));
    CHECK(is_structural_family(fs, ids));
    CHECK(is_structural_family(fs, {fs.pd.rm_pos[4]}));
    CHECK_FALSE(is_structural_family(fs, {label("F4_34", "b1^1"), label("F4_34", "b1^3")}));
    CHECK_THROWS_AS(is_structural_family(fs, {ids[0], ids[0]}), InputError);
    CHECK_THROWS_AS(is_structural_family(fs, {fs.pd.rk_pos[0]}), InputError);
}

TEST_CASE("compatibility graph shape") {
    CHECK(compatibility_graph(support::space("F4_34")).size() == 21);
    CHECK(compatibility_graph(support::space("E8_12")).size() == 84);
    const FlagSpace& fs = support::space("E6_36");
    CompatGraph g = compatibility_graph(fs);
    for (int i = 0; i < g.size(); ++i) {
        CHECK_FALSE(g.adj[i][i]);
        for (int j = 0; j < g.size(); ++j) {
            CHECK(g.adj[i][j] == g.adj[j][i]);
            if (i != j && g.module[i] == g.module[j]) CHECK(g.adj[i][j]);
        }
        if (i > 0) CHECK(g.module[i - 1] <= g.module[i]);
    }
}

TEST_CASE("maximal families agree with the brute-force oracle on F4") {
    const FlagSpace& fs = support::space("F4_34");
    EnumResult r = enumerate_maximal_families(fs);
    auto os = oracle_space("F4_34");
    CHECK(as_sets(fs, r) == oracle::maximal_cliques_bruteforce(os, 2));
    CHECK(r.families.size() == 39);
    EnumOptions all;
    all.min_modules = 1;
    CHECK(as_sets(fs, enumerate_maximal_families(fs, all)) == oracle::maximal_cliques_bruteforce(os, 1));
}

TEST_CASE("maximal families agree with unpivoted Bron-Kerbosch on E6 and G2") {
    for (const char* name : {"E6_36", "G2_12"}) {
        const FlagSpace& fs = support::space(name);
        CHECK(as_sets(fs, enumerate_maximal_families(fs)) == oracle::maximal_cliques_simple(oracle_space(name), 2));
    }
}

TEST_CASE("maximal family counts") {
    // reference values from an independent clique enumeration (networkx find_cliques)
    CHECK(enumerate_maximal_families(support::space("E6_36")).families.size() == 147);
    CHECK(enumerate_maximal_families(support::space("E7_56")).families.size() == 1713);
    CHECK(enumerate_maximal_families(support::space("E8_12")).families.size() == 78357);
}

TEST_CASE("maximal family properties") {
    for (const char* name : {"F4_34", "E6_36", "E7_56"}) {
        CAPTURE(name);
        const FlagSpace& fs = support::space(name);
        EnumResult r = enumerate_maximal_families(fs);
        CHECK_FALSE(r.truncated);
        std::vector<std::set<int>> sets;
        for (auto& f : r.families) {
            CHECK(is_structural_family(fs, f));
            std::set<int> mods;
            for (int id : f) mods.insert(fs.module_of[id]);
            CHECK(mods.size() >= 2);
            sets.emplace_back(f.begin(), f.end());
            for (int v : fs.pd.rm_pos) {
                if (sets.back().count(v)) continue;
                std::vector<int> g = f;
                g.push_back(v);
                CHECK_FALSE(is_structural_family(fs, g));
            }
        }
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (i != j) CHECK_FALSE(std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()));
        CompatGraph g = compatibility_graph(fs);
        CHECK(std::is_sorted(r.families.begin(), r.families.end(), [&](auto& a, auto& b) {
            auto key = [&](const std::vector<int>& f) {
                std::vector<int> k;
                for (int id : f) k.push_back(static_cast<int>(std::find(g.vertices.begin(), g.vertices.end(), id) - g.vertices.begin()));
                return k;
            };
            return key(a) < key(b);
        }));
    }
}

TEST_CASE("enumeration is deterministic across thread counts") {
    const FlagSpace& fs = support::space("E7_56");
    EnumOptions one, many;
    one.threads = 1;
    many.threads = 8;
    CHECK(enumerate_maximal_families(fs, one).families == enumerate_maximal_families(fs, many).families);
}

TEST_CASE("cap truncates and says so") {
    const FlagSpace& fs = support::space("E7_56");
    EnumOptions o;
    o.cap = 10;
    EnumResult r = enumerate_maximal_families(fs, o);
    CHECK(r.families.size() == 10);
    CHECK(r.truncated);
    o.cap = 5000;
    r = enumerate_maximal_families(fs, o);
    CHECK(r.families.size() == 1713);
    CHECK_FALSE(r.truncated);
    o.cap = 0;
    r = enumerate_maximal_families(fs, o);
    CHECK(r.families.empty());
    CHECK(r.truncated);
}

TEST_CASE("residual examples") {
    const FlagSpace& fs = support::space("F4_34");
    const StructureConstants& t = StructureConstants::get(Family::F4);
    const RootSystem& s = fs.sys();
    std::mt19937_64 rng(1);
    // single module: zero for any metric
    Element x = support::random_span(s, fs.modules[0].roots, rng);
    CHECK(equigeodesic_residual(t, fs, x, support::distinct_metric(rng, 6)).is_zero());
    CHECK(is_equigeodesic_all_metrics(t, fs, x));
    // a printed F4 family
    auto ids = resolve_labels(support::fixture("F4_34"), s, parse_labels("b3^3 b1^1 b6^1"));
    for (int k = 0; k < 10; ++k) {
        Element y = support::random_span(s, ids, rng);
        CHECK(equigeodesic_residual(t, fs, y, support::distinct_metric(rng, 6)).is_zero());
        CHECK(is_equigeodesic_all_metrics(t, fs, y));
    }
    // incompatible pair
    Element z = Element::A(s, label("F4_34", "b1^1")) + Element::A(s, label("F4_34", "b1^3"));
    MetricVector lam{1, 1, 2, 1, 1, 1};
    Element res = equigeodesic_residual(t, fs, z, lam);
    CHECK_FALSE(res.is_zero());
    CHECK_FALSE(is_equigeodesic_all_metrics(t, fs, z));
    // sum and difference are both roots: the residual has terms in m(2,1) and m(0,1)
    std::set<int> mods;
    for (int p : res.support()) mods.insert(fs.module_of[p]);
    CHECK(mods == std::set<int>{1, 3});
    MetricVector flat{1, 1, 1, 1, 1, 1};
    CHECK(equigeodesic_residual(t, fs, z, flat).is_zero());
}

TEST_CASE("residual input validation") {
    const FlagSpace& fs = support::space("F4_34");
    const StructureConstants& t = StructureConstants::get(Family::F4);
    const RootSystem& s = fs.sys();
    Element x = Element::A(s, fs.pd.rm_pos[0]);
    CHECK_THROWS_AS(equigeodesic_residual(t, fs, x, {1, 1, 1}), InputError);
    CHECK_THROWS_AS(equigeodesic_residual(t, fs, x, {1, 1, 0, 1, 1, 1}), InputError);
    CHECK_THROWS_AS(equigeodesic_residual(t, fs, x + Element::iH(s, 0), {1, 1, 1, 1, 1, 1}), InputError);
    CHECK_THROWS_AS(is_equigeodesic_all_metrics(t, fs, x + Element::A(s, fs.pd.rk_pos[0])), InputError);
}

TEST_CASE("scaling does not change the verdict") {
    const FlagSpace& fs = support::space("E6_36");
    const StructureConstants& t = StructureConstants::get(Family::E6);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        std::vector<int> ids;
        for (int j = 0; j < 3; ++j) ids.push_back(fs.pd.rm_pos[rng() % fs.pd.rm_pos.size()]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        Element x = support::random_span(fs.sys(), ids, rng);
        Q c = support::small_q(rng);
        CHECK(is_equigeodesic_all_metrics(t, fs, x) == is_equigeodesic_all_metrics(t, fs, c * x));
        // a global rescale of the A, B basis turns X into cX; the residual picks up c^2 and keeps its zeros
        MetricVector lam = support::distinct_metric(rng, 6);
        Element r = equigeodesic_residual(t, fs, x, lam);
        CHECK(equigeodesic_residual(t, fs, c * x, lam) == (c * c) * r);
    }
}

TEST_CASE("structural iff equigeodesic on all subsets of size at most 3 in F4") {
    // the acceptance run covers size 4 as well
    const FlagSpace& fs = support::space("F4_34");
    const StructureConstants& t = StructureConstants::get(Family::F4);
    const auto& v = fs.pd.rm_pos;
    std::mt19937_64 rng(2);
    int n = static_cast<int>(v.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b; c < n; ++c) {
                std::vector<int> ids{v[a], v[b]};
                if (c > b) ids.push_back(v[c]);
                bool structural = is_structural_family(fs, ids);
                bool eq = is_equigeodesic_all_metrics(t, fs, support::ones_span(fs.sys(), ids));
                for (int k = 0; k < 10 && eq; ++k) eq = is_equigeodesic_all_metrics(t, fs, support::random_span(fs.sys(), ids, rng));
                CHECK(structural == eq);
            }
}

TEST_CASE("structural iff equigeodesic span on random supports in E6, E7, E8") {
    std::mt19937_64 rng(12);
    for (const char* name : {"E6_36", "E7_56", "E8_12"}) {
        CAPTURE(name);
        const FlagSpace& fs = support::space(name);
        const StructureConstants& t = StructureConstants::get(fs.sys().family());
        const auto& v = fs.pd.rm_pos;
        for (int n = 0; n < 300; ++n) {
            std::set<int> pick;
            int size = 2 + static_cast<int>(rng() % 3);
            while (static_cast<int>(pick.size()) < size) pick.insert(v[rng() % v.size()]);
            std::vector<int> ids(pick.begin(), pick.end());
            bool eq = is_equigeodesic_all_metrics(t, fs, support::ones_span(fs.sys(), ids));
            for (int k = 0; k < 10 && eq; ++k) eq = is_equigeodesic_all_metrics(t, fs, support::random_span(fs.sys(), ids, rng));
            CHECK(is_structural_family(fs, ids) == eq);
        }
    }
}

TEST_CASE("an equigeodesic vector need not span a structural family") {
    const FlagSpace& fs = support::space("F4_34");
    const StructureConstants& t = StructureConstants::get(Family::F4);
    const RootSystem& s = fs.sys();
    std::vector<int> ids;
    for (Coeffs c : {Coeffs{0, 0, 1, 0}, Coeffs{0, 2, 1, 0}, Coeffs{2, 2, 2, 1}, Coeffs{2, 4, 2, 1}}) ids.push_back(s.find(c));
    CHECK_FALSE(is_structural_family(fs, ids));
    // the two incompatible pairs cancel for equal coefficients
    CHECK(is_equigeodesic_all_metrics(t, fs, support::ones_span(s, ids)));
    Element x = support::ones_span(s, ids) + Element::A(s, ids[0]);
    CHECK_FALSE(is_equigeodesic_all_metrics(t, fs, x));
}

TEST_CASE("module split reassembles the vector") {
    const FlagSpace& fs = support::space("E7_56");
    std::mt19937_64 rng(4);
    Element x = support::random_span(fs.sys(), {fs.pd.rm_pos[0], fs.pd.rm_pos[20], fs.pd.rm_pos[40]}, rng);
    Element sum(fs.sys());
    for (auto& p : split_by_module(fs, x)) sum += p;
    CHECK(sum == x);
}
