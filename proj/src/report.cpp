#include "flagroots/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace flagroots {

using nlohmann::json;

Format parse_format(std::string_view s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw InputError("unknown format '" + std::string(s) + "'");
}

std::string coeff_string(const Coeffs& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + ")";
}

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string label_string(const Label& l) { return "b" + std::to_string(l.second) + "^" + std::to_string(l.first); }

struct Context {
    const RunConfig& cfg;
    FlagSpace fs;
    const StructureConstants& t;
    std::optional<FixtureSet> fx;
    std::map<int, Label> label_of;

    explicit Context(const RunConfig& c)
        : cfg(c),
          fs(make_flag_space(RootSystem::get(c.space.family), c.space.painted)),
          t(StructureConstants::get(c.space.family)) {
        if (c.space.custom) return;
        auto path = (c.fixtures ? *c.fixtures : fixture_dir()) / (c.space.name + ".json");
        if (!std::filesystem::exists(path)) return;
        fx = load_fixture(c.space.name, c.fixtures);
        const RootSystem& s = fs.sys();
        for (int m = 0; m < static_cast<int>(fx->label_map.size()); ++m)
            for (int i = 0; i < static_cast<int>(fx->label_map[m].size()); ++i) {
                int id = s.find(fx->label_map[m][i]);
                if (id >= 0 && s.positive(id)) label_of.emplace(id, Label{m + 1, i + 1});
            }
    }

    const FixtureSet& fixture() const {
        if (!fx) throw InputError("no fixture for space " + cfg.space.name);
        return *fx;
    }
    const FixtureSet* fixture_ptr() const { return fx ? &*fx : nullptr; }

    json root(int id) const {
        json r = {{"coeffs", fs.sys().coeffs(id)}};
        if (auto it = label_of.find(id); it != label_of.end()) r["label"] = label_string(it->second);
        return r;
    }

    json header() const {
        json h;
        h["schema"] = kReportSchema;
        h["command"] = cfg.command;
        h["space"] = cfg.space.name;
        h["type"] = to_string(cfg.space.family);
        h["painted"] = cfg.space.painted;
        h["kind"] = to_string(fs.cls.kind);
        h["seed"] = cfg.seed;
        return h;
    }
};

std::vector<int> module_sort(const FlagSpace& fs, std::vector<int> ids) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return fs.module_of[a] < fs.module_of[b]; });
    return ids;
}

// ---- roots

Report cmd_roots(const Context& cx) {
    Report r;
    json& d = r.data = cx.header();
    const RootSystem& s = cx.fs.sys();
    d["rk"] = json::array();
    for (int id : cx.fs.pd.rk_pos) d["rk"].push_back(s.coeffs(id));
    d["rm_count"] = cx.fs.pd.rm_pos.size();
    d["modules"] = json::array();
    for (auto& m : cx.fs.modules) {
        json jm = {{"label", m.label}, {"troot", m.troot}, {"dim", m.dim_real}, {"roots", json::array()}};
        for (int id : m.roots) jm["roots"].push_back(cx.root(id));
        d["modules"].push_back(jm);
    }
    if (cx.cfg.check) {
        const FixtureSet& fx = cx.fixture();
        json mism = json::array();
        if (fx.label_map.size() != cx.fs.modules.size()) mism.push_back("module count differs");
        for (std::size_t m = 0; m < std::min(fx.label_map.size(), cx.fs.modules.size()); ++m) {
            std::set<Coeffs> want(fx.label_map[m].begin(), fx.label_map[m].end()), got;
            for (int id : cx.fs.modules[m].roots) got.insert(s.coeffs(id));
            if (want != got) mism.push_back("fiber " + cx.fs.modules[m].label + " differs from the fixture");
        }
        d["check"] = {{"match", mism.empty()}, {"mismatches", mism}};
        r.status = mism.empty() ? 0 : 1;
    }
    return r;
}

// ---- table

json targets_json(const std::set<int>& t) {
    json a = json::array();
    for (int x : t) a.push_back(x == 0 ? json("k") : json(x));
    return a;
}

Report cmd_table(const Context& cx) {
    if (cx.cfg.args.empty()) throw InputError("table needs one of troots, dims, brackets");
    const std::string& which = cx.cfg.args[0];
    Report r;
    json& d = r.data = cx.header();
    d["which"] = which;
    json mism = json::array();
    if (which == "troots") {
        std::vector<TRoot> got;
        for (auto& m : cx.fs.modules) got.push_back(m.troot);
        d["troots"] = got;
        if (cx.cfg.check) {
            const FixtureSet& fx = cx.fixture();
            if (std::set<TRoot>(got.begin(), got.end()) != std::set<TRoot>(fx.troots.begin(), fx.troots.end()))
                mism.push_back("t-root set differs");
            if (to_string(cx.fs.cls.kind) != fx.kind) mism.push_back("classification " + to_string(cx.fs.cls.kind) + " vs " + fx.kind);
            d["expected"] = fx.troots;
        }
    } else if (which == "dims") {
        std::vector<int> dims;
        for (auto& m : cx.fs.modules) dims.push_back(m.dim_real);
        d["dims"] = dims;
        if (cx.cfg.check) {
            const FixtureSet& fx = cx.fixture();
            if (dims != fx.dims) mism.push_back("dimensions (" + join(dims) + ") vs (" + join(fx.dims) + ")");
            d["expected"] = fx.dims;
        }
    } else if (which == "brackets") {
        InclusionTable tab = bracket_inclusion_table(cx.fs, cx.t);
        json rows = json::array();
        for (auto& row : tab) {
            json jr = json::array();
            for (auto& e : row) jr.push_back(targets_json(e));
            rows.push_back(jr);
        }
        d["brackets"] = rows;
        if (cx.cfg.check) {
            const FixtureSet& fx = cx.fixture();
            json strict = json::array();
            for (std::size_t i = 0; i < tab.size(); ++i)
                for (std::size_t j = i; j < tab.size(); ++j) {
                    const auto& got = tab[i][j];
                    const auto& bound = fx.inclusions.at(i).at(j);
                    bool sub = std::includes(bound.begin(), bound.end(), got.begin(), got.end());
                    json e = {{"pair", {i + 1, j + 1}}, {"computed", targets_json(got)}, {"bound", targets_json(bound)}};
                    if (!sub)
                        mism.push_back(e);
                    else if (got != bound)
                        strict.push_back(e);
                }
            d["strict"] = strict;
        }
    } else {
        throw InputError("unknown table '" + which + "' (expected troots, dims or brackets)");
    }
    if (cx.cfg.check) {
        d["check"] = {{"match", mism.empty()}, {"mismatches", mism}};
        r.status = mism.empty() ? 0 : 1;
    }
    return r;
}

// ---- check

Q small_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 9) + 1;
    long den = static_cast<long>(rng() % 4) + 1;
    if (rng() & 1) num = -num;
    Q q(num, den);
    q.canonicalize();
    return q;
}

Report cmd_check(const Context& cx) {
    if (cx.cfg.args.empty()) throw InputError("check needs a family specification");
    const FlagSpace& fs = cx.fs;
    std::vector<int> ids = parse_family_spec(fs, cx.fixture_ptr(), cx.cfg.args[0]);
    Report r;
    json& d = r.data = cx.header();
    d["spec"] = cx.cfg.args[0];
    d["family"] = json::array();
    for (int id : ids) {
        json e = cx.root(id);
        e["module"] = fs.modules[fs.module_of[id]].label;
        d["family"].push_back(e);
    }
    bool structural = is_structural_family(fs, ids);
    json bad = json::array();
    const RootSystem& s = fs.sys();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!pair_compatible(fs, ids[i], ids[j])) {
                int plus = s.sum(ids[i], ids[j]);
                bool is_sum = plus >= 0;
                bad.push_back({{"pair", {cx.root(ids[i]), cx.root(ids[j])}}, {"witness", is_sum ? "sum" : "difference"}});
            }
    d["structural"] = structural;
    d["incompatible_pairs"] = bad;

    // span of the family: equigeodesic for every metric iff cross-module brackets vanish
    Element x(s);
    std::mt19937_64 rng(cx.cfg.seed);
    for (int id : ids) {
        x += Element::A(s, id, small_rational(rng));
        x += Element::B(s, id, small_rational(rng));
    }
    bool all_metrics = is_equigeodesic_all_metrics(cx.t, fs, x);
    const int samples = 25;
    bool sampled_zero = true;
    for (int k = 0; k < samples; ++k) {
        MetricVector lam;
        for (int m = 0; m < fs.nmodules(); ++m) lam.emplace_back(static_cast<long>(rng() % 12) + 1);
        if (!equigeodesic_residual(cx.t, fs, x, lam).is_zero()) sampled_zero = false;
    }
    d["equigeodesic_all_metrics"] = all_metrics;
    d["sampled"] = {{"vector", to_json(x)}, {"metrics", samples}, {"residual_zero", sampled_zero}};
    if (cx.cfg.check) r.status = structural && all_metrics ? 0 : 1;
    return r;
}

// ---- enumerate

Report cmd_enumerate(const Context& cx) {
    EnumOptions opts;
    opts.min_modules = cx.cfg.min_modules;
    opts.cap = cx.cfg.cap;
    EnumResult res = enumerate_maximal_families(cx.fs, opts);
    Report r;
    json& d = r.data = cx.header();
    d["min_modules"] = cx.cfg.min_modules;
    d["cap"] = cx.cfg.cap ? json(*cx.cfg.cap) : json(nullptr);
    d["count"] = res.families.size();
    d["truncated"] = res.truncated;
    d["families"] = json::array();
    for (auto& f : res.families) {
        json roots = json::array();
        for (int id : f) roots.push_back(cx.fs.sys().coeffs(id));
        d["families"].push_back({{"label", family_label(cx.fs, cx.fixture_ptr(), f)}, {"roots", roots}});
    }
    if (cx.cfg.verify_fixtures) {
        const FixtureSet& fx = cx.fixture();
        std::vector<std::set<int>> sets;
        for (auto& f : res.families) sets.emplace_back(f.begin(), f.end());
        json uncovered = json::array(), excluded = json::array(), covered_suspect = json::array();
        int checked = 0;
        for (auto& fam : fx.families) {
            std::vector<int> ids = resolve_labels(fx, cx.fs.sys(), fam.members);
            std::set<int> want(ids.begin(), ids.end());
            bool covered = std::any_of(sets.begin(), sets.end(), [&](const std::set<int>& s) {
                return std::includes(s.begin(), s.end(), want.begin(), want.end());
            });
            if (fam.suspect) {
                excluded.push_back({{"spec", fam.spec}, {"covered", covered}, {"note", fam.note}});
                continue;
            }
            ++checked;
            if (!covered) uncovered.push_back(fam.spec);
        }
        d["verify"] = {{"checked", checked}, {"uncovered", uncovered}, {"excluded", excluded}};
        r.status = uncovered.empty() ? 0 : 1;
    }
    return r;
}

// ---- verify

Report cmd_verify(const Context& cx) {
    if (cx.cfg.args.empty()) throw InputError("verify needs a vector file");
    std::ifstream in(cx.cfg.args[0]);
    if (!in) throw InputError("cannot open " + cx.cfg.args[0]);
    json vj;
    try {
        in >> vj;
    } catch (const json::exception& e) {
        throw InputError(std::string("cannot parse vector file: ") + e.what());
    }
    const FlagSpace& fs = cx.fs;
    Element x = tangent_from_json(fs, cx.fixture_ptr(), vj);
    MetricVector lam = cx.cfg.args.size() > 1 ? parse_metric(cx.cfg.args[1], fs.nmodules())
                                              : MetricVector(fs.nmodules(), Q(1));
    Element res = equigeodesic_residual(cx.t, fs, x, lam);
    Report r;
    json& d = r.data = cx.header();
    json jl = json::array();
    for (auto& l : lam) jl.push_back(l.get_str());
    d["metric"] = jl;
    d["vector"] = to_json(x);
    d["residual_zero"] = res.is_zero();
    d["residual"] = to_json(res);
    d["by_module"] = json::array();
    auto parts = split_by_module(fs, res);
    for (int m = 0; m < fs.nmodules(); ++m)
        if (!parts[m].is_zero()) d["by_module"].push_back({{"module", fs.modules[m].label}, {"part", parts[m].str()}});
    if (cx.cfg.check) r.status = res.is_zero() ? 0 : 1;
    return r;
}

// ---- rendering

std::string roots_text(const json& d) {
    std::ostringstream o;
    o << "R_K^+ (" << d["rk"].size() << " roots):";
    for (auto& c : d["rk"]) o << ' ' << coeff_string(c.get<Coeffs>());
    o << "\nR_M^+ (" << d["rm_count"].get<int>() << " roots)\n";
    for (auto& m : d["modules"]) {
        o << m["label"].get<std::string>() << "  dim " << m["dim"].get<int>() << "  (" << m["roots"].size() << " roots)\n";
        for (auto& rt : m["roots"]) {
            o << "  " << coeff_string(rt["coeffs"].get<Coeffs>());
            if (rt.contains("label")) o << "  " << rt["label"].get<std::string>();
            o << '\n';
        }
    }
    return o.str();
}

std::string targets_text(const json& t) {
    if (t.empty()) return "0";
    std::string s;
    for (auto& x : t) {
        if (!s.empty()) s += "+";
        s += x.is_string() ? std::string("k") : "m" + std::to_string(x.get<int>());
    }
    return s;
}

std::string table_text(const json& d) {
    std::ostringstream o;
    const std::string which = d["which"];
    if (which == "troots") {
        int k = 1;
        for (auto& t : d["troots"]) o << k++ << "  " << coeff_string(t.get<Coeffs>()) << '\n';
    } else if (which == "dims") {
        o << coeff_string(d["dims"].get<Coeffs>()) << '\n';
    } else {
        auto& rows = d["brackets"];
        o << "[m_i, m_j]";
        for (std::size_t j = 0; j < rows.size(); ++j) o << "\tm" << j + 1;
        o << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            o << "m" << i + 1;
            for (auto& e : rows[i]) o << '\t' << targets_text(e);
            o << '\n';
        }
        if (d.contains("strict"))
            for (auto& e : d["strict"])
                o << "strictly inside bound: [m" << e["pair"][0] << ", m" << e["pair"][1] << "] = " << targets_text(e["computed"])
                  << " within " << targets_text(e["bound"]) << '\n';
    }
    return o.str();
}

std::string check_text(const json& d) {
    std::ostringstream o;
    o << "family:";
    for (auto& e : d["family"]) o << ' ' << (e.contains("label") ? e["label"].get<std::string>() : coeff_string(e["coeffs"].get<Coeffs>()));
    o << "\nstructural: " << (d["structural"].get<bool>() ? "yes" : "no") << '\n';
    for (auto& p : d["incompatible_pairs"]) {
        auto name = [](const json& e) { return e.contains("label") ? e["label"].get<std::string>() : coeff_string(e["coeffs"].get<Coeffs>()); };
        o << "  incompatible: " << name(p["pair"][0]) << ", " << name(p["pair"][1]) << " (" << p["witness"].get<std::string>() << " is a root)\n";
    }
    o << "equigeodesic for all metrics: " << (d["equigeodesic_all_metrics"].get<bool>() ? "yes" : "no") << '\n';
    o << "sampled residual over " << d["sampled"]["metrics"].get<int>() << " metrics: "
      << (d["sampled"]["residual_zero"].get<bool>() ? "zero" : "nonzero") << '\n';
    return o.str();
}

std::string enumerate_text(const json& d) {
    std::ostringstream o;
    o << d["count"].get<std::size_t>() << " maximal families (min modules " << d["min_modules"].get<int>() << ")";
    if (d["truncated"].get<bool>()) o << ", truncated at cap";
    o << '\n';
    for (auto& f : d["families"]) o << "  " << f["label"].get<std::string>() << '\n';
    if (d.contains("verify")) {
        auto& v = d["verify"];
        o << "fixture families checked: " << v["checked"].get<int>() << ", uncovered: " << v["uncovered"].size() << '\n';
        for (auto& u : v["uncovered"]) o << "  uncovered: " << u.get<std::string>() << '\n';
        for (auto& e : v["excluded"])
            o << "  excluded (suspect): " << e["spec"].get<std::string>() << "  [" << e["note"].get<std::string>() << "]\n";
    }
    return o.str();
}

std::string verify_text(const json& d) {
    std::ostringstream o;
    if (d["residual_zero"].get<bool>()) {
        o << "zero\n";
    } else {
        o << "nonzero residual\n";
        for (auto& p : d["by_module"]) o << "  " << p["module"].get<std::string>() << ": " << p["part"].get<std::string>() << '\n';
    }
    return o.str();
}

std::string tex_coeffs(const json& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i].get<int>());
    return s + ")";
}

std::string tex_label(const std::string& l) {
    // "b3^1" -> "\beta_{3}^{1}"
    auto caret = l.find('^');
    if (l.empty() || l[0] != 'b' || caret == std::string::npos) return "\\texttt{" + l + "}";
    return "\\beta_{" + l.substr(1, caret - 1) + "}^{" + l.substr(caret + 1) + "}";
}

std::string tex_family(const std::string& label) {
    std::istringstream in(label);
    std::string tok, out;
    while (in >> tok) {
        if (!out.empty()) out += "\\oplus";
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            auto caret = tok.find('^');
            out += "\\bigoplus_{i=" + tok.substr(1, dots - 1) + "}^{" + tok.substr(dots + 2, caret - dots - 2) + "}\\mathfrak{U}_{\\beta_i^{" +
                   tok.substr(caret + 1) + "}}";
        } else {
            out += "\\mathfrak{U}_{" + tex_label(tok) + "}";
        }
    }
    return out;
}

std::string render_latex(const json& d) {
    std::ostringstream o;
    const std::string cmd = d["command"];
    o << "% " << d["space"].get<std::string>() << " seed " << d["seed"].get<std::uint64_t>() << '\n';
    if (cmd == "roots") {
        o << "\\begin{tabular}{lcl}\n\\hline\nmodule & dim & roots \\\\\n\\hline\n";
        for (auto& m : d["modules"]) {
            o << m["label"].get<std::string>() << " & " << m["dim"].get<int>() << " & $";
            bool first = true;
            for (auto& rt : m["roots"]) {
                o << (first ? "" : ",\\ ") << tex_coeffs(rt["coeffs"]);
                first = false;
            }
            o << "$ \\\\\n";
        }
        o << "\\hline\n\\end{tabular}\n";
    } else if (cmd == "table") {
        const std::string which = d["which"];
        if (which == "troots") {
            o << "\\begin{tabular}{c" << std::string(d["troots"].size(), 'c') << "}\n\\hline\n" << d["type"].get<std::string>() << " & ";
            bool first = true;
            for (auto& t : d["troots"]) {
                o << (first ? "" : " & ") << "$" << tex_coeffs(t) << "$";
                first = false;
            }
            o << " \\\\\n\\hline\n\\end{tabular}\n";
        } else if (which == "dims") {
            o << "\\begin{tabular}{c" << std::string(d["dims"].size(), 'c') << "}\n\\hline\n" << d["type"].get<std::string>();
            for (auto& x : d["dims"]) o << " & " << x.get<int>();
            o << " \\\\\n\\hline\n\\end{tabular}\n";
        } else {
            auto& rows = d["brackets"];
            o << "\\begin{tabular}{c" << std::string(rows.size(), 'c') << "}\n\\hline\n";
            for (std::size_t j = 0; j < rows.size(); ++j) o << " & $\\mathfrak{m}_" << j + 1 << "$";
            o << " \\\\\n\\hline\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                o << "$\\mathfrak{m}_" << i + 1 << "$";
                for (auto& e : rows[i]) {
                    std::string s;
                    for (auto& x : e) {
                        if (!s.empty()) s += "\\oplus";
                        s += x.is_string() ? std::string("\\mathfrak{k}") : "\\mathfrak{m}_" + std::to_string(x.get<int>());
                    }
                    o << " & $" << (s.empty() ? "0" : s) << "$";
                }
                o << " \\\\\n";
            }
            o << "\\hline\n\\end{tabular}\n";
        }
    } else if (cmd == "enumerate") {
        o << "\\begin{tabular}{l}\n\\hline\n";
        for (auto& f : d["families"]) o << "$" << tex_family(f["label"].get<std::string>()) << "$ \\\\\n";
        o << "\\hline\n\\end{tabular}\n";
    } else if (cmd == "check") {
        std::string fam;
        for (auto& e : d["family"]) fam += (fam.empty() ? "" : " ") + (e.contains("label") ? e["label"].get<std::string>() : std::string("?"));
        o << "$" << tex_family(fam) << "$: structural " << (d["structural"].get<bool>() ? "yes" : "no") << ", equigeodesic "
          << (d["equigeodesic_all_metrics"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        o << "$[X,\\Lambda X]_{\\mathfrak{m}} " << (d["residual_zero"].get<bool>() ? "= 0" : "\\neq 0") << "$\n";
    }
    return o.str();
}

}  // namespace

std::vector<int> parse_family_spec(const FlagSpace& fs, const FixtureSet* fx, std::string_view spec) {
    const RootSystem& s = fs.sys();
    std::vector<int> ids;
    if (spec.find('(') != std::string_view::npos || spec.find('[') != std::string_view::npos) {
        std::string buf(spec);
        std::size_t i = 0;
        while ((i = buf.find_first_of("([", i)) != std::string::npos) {
            char close = buf[i] == '(' ? ')' : ']';
            auto j = buf.find(close, i);
            if (j == std::string::npos) throw InputError("unbalanced coefficient vector");
            Coeffs c;
            std::istringstream in(buf.substr(i + 1, j - i - 1));
            std::string tok;
            while (std::getline(in, tok, ',')) {
                try {
                    std::size_t used = 0;
                    c.push_back(std::stoi(tok, &used));
                    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
                    if (used != tok.size()) throw InputError("bad coefficient '" + tok + "'");
                } catch (const std::logic_error&) {
                    throw InputError("bad coefficient '" + tok + "'");
                }
            }
            if (static_cast<int>(c.size()) != s.rank()) throw InputError("coefficient vector " + coeff_string(c) + " has wrong length");
            int id = s.find(c);
            if (id < 0) throw InputError(coeff_string(c) + " is not a root");
            if (!s.positive(id) || fs.module_of[id] < 0) throw InputError(coeff_string(c) + " is not in R_M^+");
            ids.push_back(id);
            i = j + 1;
        }
    } else {
        if (!fx) throw InputError("beta labels need a fixture for this space; give coefficient vectors instead");
        ids = resolve_labels(*fx, s, parse_labels(spec));
    }
    if (ids.empty()) throw InputError("empty family specification");
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InputError("family contains a duplicate root");
    return module_sort(fs, ids);
}

Element tangent_from_json(const FlagSpace& fs, const FixtureSet* fx, const json& j) {
    const RootSystem& s = fs.sys();
    Element x(s);
    if (!j.is_object()) throw InputError("tangent vector must be a JSON object");
    for (const char* part : {"A", "B"}) {
        if (!j.contains(part)) continue;
        for (auto& e : j.at(part)) {
            int id;
            try {
                if (e.contains("label")) {
                    if (!fx) throw InputError("labels need a fixture for this space");
                    auto ls = parse_labels(e.at("label").get<std::string>());
                    if (ls.size() != 1) throw InputError("one label per entry");
                    id = resolve_label(*fx, s, ls[0]);
                } else {
                    Coeffs c = e.at("root").get<Coeffs>();
                    if (static_cast<int>(c.size()) != s.rank()) throw InputError("root " + coeff_string(c) + " has wrong length");
                    id = s.find(c);
                    if (id < 0 || !s.positive(id)) throw InputError(coeff_string(c) + " is not a positive root");
                }
                if (fs.module_of[id] < 0) throw InputError("support violation: " + coeff_string(s.coeffs(id)) + " lies in R_K");
                if (e.contains("module")) {
                    int m = e.at("module").get<int>();
                    if (m != fs.module_of[id] + 1) throw InputError("root " + coeff_string(s.coeffs(id)) + " is not in module " + std::to_string(m));
                }
                const json& cj = e.contains("coeff") ? e.at("coeff") : json(1);
                Q c = cj.is_string() ? Q(cj.get<std::string>()) : Q(cj.get<long>());
                c.canonicalize();
                x += std::string(part) == "A" ? Element::A(s, id, c) : Element::B(s, id, c);
            } catch (const json::exception& ex) {
                throw InputError(std::string("malformed vector entry: ") + ex.what());
            } catch (const std::invalid_argument&) {
                throw InputError("bad rational coefficient");
            }
        }
    }
    return x;
}

MetricVector parse_metric(std::string_view spec, int nmodules) {
    MetricVector lam;
    std::string buf(spec);
    for (char& c : buf)
        if (c == ',' || c == '(' || c == ')') c = ' ';
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
        Q q;
        try {
            q = Q(tok);
        } catch (const std::invalid_argument&) {
            throw InputError("bad metric entry '" + tok + "'");
        }
        q.canonicalize();
        if (sgn(q) <= 0) throw InputError("metric parameters must be positive");
        lam.push_back(q);
    }
    if (static_cast<int>(lam.size()) != nmodules)
        throw InputError("metric needs " + std::to_string(nmodules) + " parameters, got " + std::to_string(lam.size()));
    return lam;
}

std::string family_label(const FlagSpace& fs, const FixtureSet* fx, const std::vector<int>& ids) {
    if (!fx) {
        std::string s;
        for (int id : module_sort(fs, ids)) s += (s.empty() ? "" : " ") + coeff_string(fs.sys().coeffs(id));
        return s;
    }
    // group indices per module, then compress consecutive runs
    std::map<int, std::vector<int>> per;
    std::vector<std::string> loose;
    for (int id : ids) {
        bool found = false;
        for (int m = 0; m < static_cast<int>(fx->label_map.size()) && !found; ++m)
            for (int i = 0; i < static_cast<int>(fx->label_map[m].size()); ++i)
                if (fx->label_map[m][i] == fs.sys().coeffs(id)) {
                    per[m + 1].push_back(i + 1);
                    found = true;
                    break;
                }
        if (!found) loose.push_back(coeff_string(fs.sys().coeffs(id)));
    }
    std::string out;
    for (auto& [m, v] : per) {
        std::sort(v.begin(), v.end());
        for (std::size_t a = 0; a < v.size();) {
            std::size_t b = a;
            while (b + 1 < v.size() && v[b + 1] == v[b] + 1) ++b;
            out += out.empty() ? "" : " ";
            out += "b" + std::to_string(v[a]) + (b > a ? ".." + std::to_string(v[b]) : "") + "^" + std::to_string(m);
            a = b + 1;
        }
    }
    for (auto& l : loose) out += (out.empty() ? "" : " ") + l;
    return out;
}

Report run(const RunConfig& cfg) {
    if (cfg.min_modules < 1) throw InputError("--min-modules must be at least 1");
    Context cx(cfg);
    if (cfg.command == "roots") return cmd_roots(cx);
    if (cfg.command == "table") return cmd_table(cx);
    if (cfg.command == "check") return cmd_check(cx);
    if (cfg.command == "enumerate") return cmd_enumerate(cx);
    if (cfg.command == "verify") return cmd_verify(cx);
    throw InputError("unknown command '" + cfg.command + "'");
}

std::string render(const Report& r, Format f) {
    const json& d = r.data;
    if (f == Format::Json) return d.dump(1) + "\n";
    if (f == Format::Latex) return render_latex(d);
    std::ostringstream o;
    o << d["command"].get<std::string>() << ' ' << d["space"].get<std::string>() << "  (" << d["type"].get<std::string>() << ", painted "
      << join(d["painted"].get<std::vector<int>>()) << ", " << d["kind"].get<std::string>() << ", seed " << d["seed"].get<std::uint64_t>()
      << ")\n";
    const std::string cmd = d["command"];
    if (cmd == "roots") o << roots_text(d);
    else if (cmd == "table") o << table_text(d);
    else if (cmd == "check") o << check_text(d);
    else if (cmd == "enumerate") o << enumerate_text(d);
    else o << verify_text(d);
    if (d.contains("check")) {
        o << (d["check"]["match"].get<bool>() ? "check: match\n" : "check: MISMATCH\n");
        for (auto& m : d["check"]["mismatches"]) o << "  " << (m.is_string() ? m.get<std::string>() : m.dump()) << '\n';
    }
    return o.str();
}

}  // namespace flagroots
