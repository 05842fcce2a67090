#pragma once

#include <bitset>
#include <cstddef>
#include <optional>
#include <vector>

#include "flagroots/chevalley.hpp"
#include "flagroots/flag.hpp"

namespace flagroots {

// a, b are positive root ids in R_M^+
bool pair_compatible(const FlagSpace& fs, int a, int b);

// roots: positive ids in R_M^+ (module membership is read from fs)
bool is_structural_family(const FlagSpace& fs, const std::vector<int>& roots);

struct CompatGraph {
    static constexpr std::size_t kMax = 128;
    using Bits = std::bitset<kMax>;
    std::vector<int> vertices;  // positive root ids, module order then canonical order
    std::vector<int> module;    // module index per vertex
    std::vector<Bits> adj;

    int size() const { return static_cast<int>(vertices.size()); }
};

CompatGraph compatibility_graph(const FlagSpace& fs);

struct EnumOptions {
    int min_modules = 2;
    std::optional<std::size_t> cap;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct EnumResult {
    std::vector<std::vector<int>> families;  // root ids, each sorted by vertex order
    bool truncated = false;
};

EnumResult enumerate_maximal_families(const FlagSpace& fs, const EnumOptions& opts = {});

// Lambda has one positive entry per module.
using MetricVector = std::vector<Q>;

// [X, Lambda X] projected to m
Element equigeodesic_residual(const StructureConstants& t, const FlagSpace& fs, const Element& x, const MetricVector& lambda);

// [X_i, X_j] = 0 for all module pairs i < j
bool is_equigeodesic_all_metrics(const StructureConstants& t, const FlagSpace& fs, const Element& x);

// Components of x on module m (0-based).
Element module_part(const FlagSpace& fs, const Element& x, int m);

// Splits an element of m into its module components.
std::vector<Element> split_by_module(const FlagSpace& fs, const Element& x);

}  // namespace flagroots
