#include "flagroots/flag.hpp"

#include <algorithm>
#include <map>

namespace flagroots {

namespace {

const std::vector<TRoot> kTypeI{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
const std::vector<TRoot> kTypeII{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};

std::string troot_label(char prefix, const TRoot& t) {
    std::string s(1, prefix);
    s += "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

}  // namespace

std::string to_string(G2Kind k) {
    switch (k) {
        case G2Kind::TypeI: return "TypeI";
        case G2Kind::TypeII: return "TypeII";
        case G2Kind::NotG2Type: return "NotG2Type";
    }
    return "?";
}

PaintedDiagram paint(const RootSystem& s, std::vector<int> painted) {
    if (painted.empty()) throw InputError("painted node set is empty");
    std::sort(painted.begin(), painted.end());
    if (std::adjacent_find(painted.begin(), painted.end()) != painted.end())
        throw InputError("painted node set has duplicates");
    for (int i : painted)
        if (i < 1 || i > s.rank()) throw InputError("painted node " + std::to_string(i) + " out of range");
    PaintedDiagram pd;
    pd.sys = &s;
    pd.painted = std::move(painted);
    pd.in_m.assign(s.npos(), 0);
    for (int id = 0; id < s.npos(); ++id) {
        bool m = false;
        for (int i : pd.painted) m = m || s.coeffs(id)[i - 1] != 0;
        pd.in_m[id] = m;
        (m ? pd.rm_pos : pd.rk_pos).push_back(id);
    }
    return pd;
}

TRoot t_root(const PaintedDiagram& pd, const Coeffs& alpha) {
    if (static_cast<int>(alpha.size()) != pd.sys->rank()) throw InputError("dimension mismatch");
    if (pd.sys->find(alpha) < 0) throw InputError("not a root");
    TRoot t;
    bool nonzero = false;
    for (int i : pd.painted) {
        t.push_back(alpha[i - 1]);
        nonzero = nonzero || alpha[i - 1] != 0;
    }
    if (!nonzero) throw InputError("root lies in R_K; its t-root is not defined");
    return t;
}

Classification classify_g2_type(const PaintedDiagram& pd) {
    Classification c;
    if (pd.painted.size() != 2) return c;
    std::set<TRoot> ts;
    for (int id : pd.rm_pos) ts.insert(t_root(pd, pd.sys->coeffs(id)));
    if (ts == std::set<TRoot>(kTypeI.begin(), kTypeI.end())) c = {G2Kind::TypeI, kTypeI};
    else if (ts == std::set<TRoot>(kTypeII.begin(), kTypeII.end())) c = {G2Kind::TypeII, kTypeII};
    return c;
}

std::vector<IsotropyModule> isotropy_decomposition(const PaintedDiagram& pd) {
    const RootSystem& s = *pd.sys;
    std::map<TRoot, std::vector<int>> fibers;
    for (int id : pd.rm_pos) fibers[t_root(pd, s.coeffs(id))].push_back(id);

    Classification cls = classify_g2_type(pd);
    std::vector<TRoot> order = cls.module_order;
    if (order.empty()) {
        for (auto& [t, v] : fibers) order.push_back(t);
        std::stable_sort(order.begin(), order.end(), canonical_less);
    }
    char prefix = cls.kind == G2Kind::TypeII ? 'n' : 'm';
    std::vector<IsotropyModule> out;
    for (const TRoot& t : order) {
        IsotropyModule m;
        m.troot = t;
        m.roots = fibers.at(t);
        m.dim_real = 2 * static_cast<int>(m.roots.size());
        m.label = troot_label(prefix, t);
        out.push_back(std::move(m));
    }
    return out;
}

FlagSpace make_flag_space(const RootSystem& s, std::vector<int> painted) {
    FlagSpace fs;
    fs.pd = paint(s, std::move(painted));
    fs.cls = classify_g2_type(fs.pd);
    fs.modules = isotropy_decomposition(fs.pd);
    fs.module_of.assign(s.npos(), -1);
    for (int m = 0; m < fs.nmodules(); ++m)
        for (int id : fs.modules[m].roots) fs.module_of[id] = m;
    return fs;
}

Element project_m(const PaintedDiagram& pd, const Element& x) {
    if (x.sys != pd.sys) throw InputError("element does not belong to this painted diagram");
    Element r(*pd.sys);
    for (auto& [p, v] : x.a)
        if (pd.in_m[p]) r.a[p] = v;
    for (auto& [p, v] : x.b)
        if (pd.in_m[p]) r.b[p] = v;
    return r;
}

InclusionTable bracket_inclusion_table(const FlagSpace& fs, const StructureConstants& t) {
    if (!fs.g2_type()) throw InputError("bracket inclusion table requires a G2-type painting");
    const RootSystem& s = fs.sys();
    const int m = fs.nmodules();
    InclusionTable tab(m, std::vector<std::set<int>>(m));
    auto basis = [&](int id) { return std::vector<Element>{Element::A(s, id), Element::B(s, id)}; };
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::set<int>& hit = tab[i][j];
            for (int x : fs.modules[i].roots)
                for (int y : fs.modules[j].roots)
                    for (const Element& ex : basis(x))
                        for (const Element& ey : basis(y)) {
                            Element z = bracket(t, ex, ey);
                            for (const Q& c : z.h)
                                if (sgn(c) != 0) hit.insert(0);
                            for (int p : z.support()) hit.insert(fs.module_of[p] < 0 ? 0 : fs.module_of[p] + 1);
                        }
            tab[j][i] = hit;
        }
    return tab;
}

}  // namespace flagroots
