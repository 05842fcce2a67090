#pragma once

#include <map>
#include <random>
#include <vector>

#include "flagroots/chevalley.hpp"
#include "flagroots/equigeo.hpp"
#include "flagroots/fixtures.hpp"
#include "oracles.hpp"

namespace support {

using namespace flagroots;

inline const Family kFamilies[] = {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8};

inline const FlagSpace& space(const std::string& name) {
    static std::map<std::string, FlagSpace> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        SpaceId id = parse_space(name);
        it = cache.emplace(name, make_flag_space(RootSystem::get(id.family), id.painted)).first;
    }
    return it->second;
}

inline const FixtureSet& fixture(const std::string& name) {
    static std::map<std::string, FixtureSet> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, load_fixture(name)).first;
    return it->second;
}

// Complex Chevalley basis: E_gamma for every root id, H_k for the simple coroots.
// Structure constants come from the table under test; everything else from the oracle Gram matrix.
class ComplexAlgebra {
public:
    struct Vec {
        std::map<int, Q> e;
        std::vector<Q> h;
        bool zero() const {
            for (auto& [k, v] : e)
                if (sgn(v)) return false;
            for (auto& v : h)
                if (sgn(v)) return false;
            return true;
        }
    };

    explicit ComplexAlgebra(const StructureConstants& t) : t_(t), s_(t.system()), a_(oracle::cartan(s_.family())), g_(oracle::gram(s_.family())) {}

    int dim() const { return s_.nroots() + s_.rank(); }
    Vec basis(int i) const {
        Vec v{{}, std::vector<Q>(s_.rank())};
        if (i < s_.nroots()) v.e[i] = 1;
        else v.h[i - s_.nroots()] = 1;
        return v;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec r{{}, std::vector<Q>(s_.rank())};
        for (int k = 0; k < s_.rank(); ++k) {
            if (sgn(x.h[k]))
                for (auto& [b, v] : y.e) r.e[b] += x.h[k] * v * weight(b, k);
            if (sgn(y.h[k]))
                for (auto& [b, v] : x.e) r.e[b] -= y.h[k] * v * weight(b, k);
        }
        for (auto& [a, u] : x.e)
            for (auto& [b, v] : y.e) {
                if (b == s_.neg(a)) {
                    // [E_a, E_-a] = -h_a
                    auto h = coroot(a);
                    for (int k = 0; k < s_.rank(); ++k) r.h[k] -= u * v * h[k];
                    continue;
                }
                int c = s_.sum(a, b);
                if (c >= 0) r.e[c] += u * v * t_.N(a, b);
            }
        return r;
    }

    static Vec combine(const Vec& a, const Vec& b, const Vec& c) {
        Vec r = a;
        for (auto& [k, v] : b.e) r.e[k] += v;
        for (auto& [k, v] : c.e) r.e[k] += v;
        for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] += b.h[i] + c.h[i];
        return r;
    }

    bool jacobi(int i, int j, int k) const {
        Vec x = basis(i), y = basis(j), z = basis(k);
        return combine(bracket(x, bracket(y, z)), bracket(y, bracket(z, x)), bracket(z, bracket(x, y))).zero();
    }

private:
    int weight(int b, int k) const {
        const Coeffs& c = s_.coeffs(b);
        int w = 0;
        for (int j = 0; j < s_.rank(); ++j) w += c[j] * a_[k][j];
        return w;
    }
    // h_a in the basis of simple coroots: (a_j, a_j) / (a, a) * c_j
    std::vector<Q> coroot(int a) const {
        const Coeffs& c = s_.coeffs(a);
        int n = s_.rank();
        long aa = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) aa += static_cast<long>(c[i]) * g_[i][j] * c[j];
        std::vector<Q> h(n);
        for (int j = 0; j < n; ++j) h[j] = Q(static_cast<long>(c[j]) * g_[j][j], aa);
        for (auto& q : h) q.canonicalize();
        return h;
    }

    const StructureConstants& t_;
    const RootSystem& s_;
    std::vector<oracle::V> a_, g_;
};

// Real basis element number i: A_p, B_p, then iH_k.
inline Element real_basis(const RootSystem& s, int i) {
    if (i < s.npos()) return Element::A(s, i);
    if (i < 2 * s.npos()) return Element::B(s, i - s.npos());
    return Element::iH(s, i - 2 * s.npos());
}

inline int real_dim(const RootSystem& s) { return 2 * s.npos() + s.rank(); }

inline Q small_q(std::mt19937_64& rng) {
    long n = static_cast<long>(rng() % 9) + 1, d = static_cast<long>(rng() % 5) + 1;
    Q q(rng() % 2 ? n : -n, d);
    q.canonicalize();
    return q;
}

// Random positive metric with pairwise distinct entries.
inline MetricVector distinct_metric(std::mt19937_64& rng, int n) {
    MetricVector lam;
    while (static_cast<int>(lam.size()) < n) {
        Q q(static_cast<long>(rng() % 40) + 1, static_cast<long>(rng() % 3) + 1);
        q.canonicalize();
        if (std::find(lam.begin(), lam.end(), q) == lam.end()) lam.push_back(q);
    }
    return lam;
}

inline Element random_span(const RootSystem& s, const std::vector<int>& ids, std::mt19937_64& rng) {
    Element x(s);
    for (int id : ids) {
        x += Element::A(s, id, small_q(rng));
        if (rng() % 4) x += Element::B(s, id, small_q(rng));
    }
    return x;
}

inline Element ones_span(const RootSystem& s, const std::vector<int>& ids) {
    Element x(s);
    for (int id : ids) x += Element::A(s, id) + Element::B(s, id);
    return x;
}

}  // namespace support
