#pragma once

#include <set>
#include <string>
#include <vector>

#include "flagroots/chevalley.hpp"
#include "flagroots/rootsys.hpp"

namespace flagroots {

struct PaintedDiagram {
    const RootSystem* sys = nullptr;
    std::vector<int> painted;  // 1-based node indices, increasing
    std::vector<int> rk_pos;   // positive root ids supported on unpainted nodes
    std::vector<int> rm_pos;   // the complement
    std::vector<char> in_m;    // per positive id
};

PaintedDiagram paint(const RootSystem& s, std::vector<int> painted);

// Coefficients at the painted nodes, in increasing node order.
using TRoot = std::vector<int>;
TRoot t_root(const PaintedDiagram& pd, const Coeffs& alpha);

enum class G2Kind { TypeI, TypeII, NotG2Type };
std::string to_string(G2Kind k);

struct Classification {
    G2Kind kind = G2Kind::NotG2Type;
    std::vector<TRoot> module_order;
};

Classification classify_g2_type(const PaintedDiagram& pd);

struct IsotropyModule {
    TRoot troot;
    std::vector<int> roots;  // positive ids, canonical order
    int dim_real = 0;
    std::string label;
};

std::vector<IsotropyModule> isotropy_decomposition(const PaintedDiagram& pd);

// Painted diagram with its decomposition and a root -> module lookup.
struct FlagSpace {
    PaintedDiagram pd;
    Classification cls;
    std::vector<IsotropyModule> modules;
    std::vector<int> module_of;  // per positive id; -1 on R_K

    const RootSystem& sys() const { return *pd.sys; }
    int nmodules() const { return static_cast<int>(modules.size()); }
    bool g2_type() const { return cls.kind != G2Kind::NotG2Type; }
};

FlagSpace make_flag_space(const RootSystem& s, std::vector<int> painted);

// Zeroes the Cartan part and every coefficient on R_K.
Element project_m(const PaintedDiagram& pd, const Element& x);

// entry[i][j]: targets hit by [m_i, m_j]; 0 stands for k, t stands for module t (1-based)
using InclusionTable = std::vector<std::vector<std::set<int>>>;
InclusionTable bracket_inclusion_table(const FlagSpace& fs, const StructureConstants& t);

}  // namespace flagroots
