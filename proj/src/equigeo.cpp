#include "flagroots/equigeo.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace flagroots {

namespace {

void require_m(const FlagSpace& fs, int id) {
    if (id < 0 || id >= fs.sys().npos() || fs.module_of[id] < 0)
        throw InputError("root is not in R_M^+");
}

void require_tangent(const FlagSpace& fs, const Element& x) {
    if (x.sys != fs.pd.sys) throw InputError("vector belongs to a different root system");
    for (const Q& c : x.h)
        if (sgn(c) != 0) throw InputError("support violation: tangent vector has a Cartan component");
    for (int p : x.support()) {
        if (fs.module_of[p] < 0) throw InputError("support violation: tangent vector has an R_K component");
    }
}

using Bits = CompatGraph::Bits;

struct BK {
    const CompatGraph& g;
    int min_modules;
    std::optional<std::size_t> cap;
    std::vector<std::vector<int>> out;
    bool stopped = false;

    void emit(const Bits& r) {
        std::vector<int> c;
        std::vector<char> seen(16, 0);
        int mods = 0;
        for (int v = 0; v < g.size(); ++v)
            if (r[v]) {
                c.push_back(v);
                int m = g.module[v];
                if (m >= static_cast<int>(seen.size())) seen.resize(m + 1, 0);
                if (!seen[m]) seen[m] = 1, ++mods;
            }
        if (mods < min_modules) return;
        if (cap && out.size() >= *cap) {
            stopped = true;
            return;
        }
        out.push_back(std::move(c));
    }

    void run(Bits r, Bits p, Bits x) {
        if (stopped) return;
        if (p.none()) {
            if (x.none()) emit(r);
            return;
        }
        Bits px = p | x;
        int pivot = -1;
        std::size_t best = 0;
        for (int u = 0; u < g.size(); ++u) {
            if (!px[u]) continue;
            std::size_t c = (p & g.adj[u]).count();
            if (pivot < 0 || c > best) pivot = u, best = c;
        }
        Bits cand = p & ~g.adj[pivot];
        for (int v = 0; v < g.size() && !stopped; ++v) {
            if (!cand[v]) continue;
            Bits rv = r;
            rv.set(v);
            run(rv, p & g.adj[v], x & g.adj[v]);
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

bool pair_compatible(const FlagSpace& fs, int a, int b) {
    require_m(fs, a);
    require_m(fs, b);
    if (fs.module_of[a] == fs.module_of[b]) return true;
    const RootSystem& s = fs.sys();
    return s.sum(a, b) < 0 && s.sum(a, s.neg(b)) < 0;
}

bool is_structural_family(const FlagSpace& fs, const std::vector<int>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (roots[i] == roots[j]) throw InputError("family contains a duplicate root");
            if (!pair_compatible(fs, roots[i], roots[j])) return false;
        }
    if (roots.size() == 1) require_m(fs, roots[0]);
    return true;
}

CompatGraph compatibility_graph(const FlagSpace& fs) {
    if (!fs.g2_type()) throw InputError("compatibility graph requires a G2-type painting");
    CompatGraph g;
    for (int m = 0; m < fs.nmodules(); ++m)
        for (int id : fs.modules[m].roots) {
            g.vertices.push_back(id);
            g.module.push_back(m);
        }
    if (g.vertices.size() > CompatGraph::kMax) throw InputError("too many complementary roots");
    g.adj.assign(g.size(), Bits());
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (pair_compatible(fs, g.vertices[i], g.vertices[j])) g.adj[i].set(j), g.adj[j].set(i);
    return g;
}

EnumResult enumerate_maximal_families(const FlagSpace& fs, const EnumOptions& opts) {
    CompatGraph g = compatibility_graph(fs);
    EnumResult res;
    Bits all;
    for (int v = 0; v < g.size(); ++v) all.set(v);

    std::vector<std::vector<int>> found;
    if (opts.cap) {
        BK bk{g, opts.min_modules, opts.cap, {}, false};
        bk.run(Bits(), all, Bits());
        found = std::move(bk.out);
        res.truncated = bk.stopped;
    } else {
        // split the top level of the pivoted recursion into independent tasks
        struct Task {
            int v;
            Bits p, x;
        };
        std::vector<Task> tasks;
        Bits p = all, x;
        int pivot = 0;
        std::size_t best = 0;
        for (int u = 0; u < g.size(); ++u)
            if (std::size_t c = (p & g.adj[u]).count(); c > best) pivot = u, best = c;
        Bits cand = g.size() ? (p & ~g.adj[pivot]) : Bits();
        for (int v = 0; v < g.size(); ++v) {
            if (!cand[v]) continue;
            tasks.push_back({v, p & g.adj[v], x & g.adj[v]});
            p.reset(v);
            x.set(v);
        }
        unsigned nthreads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
        nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(1, tasks.size()));
        std::vector<std::future<std::vector<std::vector<int>>>> futs;
        for (unsigned w = 0; w < nthreads; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                BK bk{g, opts.min_modules, std::nullopt, {}, false};
                for (std::size_t k = w; k < tasks.size(); k += nthreads) {
                    Bits r;
                    r.set(tasks[k].v);
                    bk.run(r, tasks[k].p, tasks[k].x);
                }
                return std::move(bk.out);
            }));
        for (auto& f : futs) {
            auto part = f.get();
            found.insert(found.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    std::sort(found.begin(), found.end());
    for (auto& c : found) {
        std::vector<int> ids;
        for (int v : c) ids.push_back(g.vertices[v]);
        res.families.push_back(std::move(ids));
    }
    return res;
}

Element module_part(const FlagSpace& fs, const Element& x, int m) {
    Element r(fs.sys());
    for (auto& [p, v] : x.a)
        if (fs.module_of[p] == m) r.a[p] = v;
    for (auto& [p, v] : x.b)
        if (fs.module_of[p] == m) r.b[p] = v;
    return r;
}

std::vector<Element> split_by_module(const FlagSpace& fs, const Element& x) {
    std::vector<Element> out;
    for (int m = 0; m < fs.nmodules(); ++m) out.push_back(module_part(fs, x, m));
    return out;
}

Element equigeodesic_residual(const StructureConstants& t, const FlagSpace& fs, const Element& x, const MetricVector& lambda) {
    require_tangent(fs, x);
    if (static_cast<int>(lambda.size()) != fs.nmodules())
        throw InputError("metric needs one parameter per module");
    for (const Q& l : lambda)
        if (sgn(l) <= 0) throw InputError("metric parameters must be positive");
    Element lx(fs.sys());
    for (int m = 0; m < fs.nmodules(); ++m) lx += lambda[m] * module_part(fs, x, m);
    return project_m(fs.pd, bracket(t, x, lx));
}

bool is_equigeodesic_all_metrics(const StructureConstants& t, const FlagSpace& fs, const Element& x) {
    require_tangent(fs, x);
    std::vector<Element> parts = split_by_module(fs, x);
    for (int i = 0; i < fs.nmodules(); ++i) {
        if (parts[i].is_zero()) continue;
        for (int j = i + 1; j < fs.nmodules(); ++j) {
            if (parts[j].is_zero()) continue;
            if (!bracket(t, parts[i], parts[j]).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace flagroots
