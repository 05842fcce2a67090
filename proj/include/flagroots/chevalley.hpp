#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "flagroots/rootsys.hpp"

namespace flagroots {

using Q = mpq_class;

// Integer structure constants on a Weyl-type basis E_alpha, normalized so that
// [E_alpha, E_-alpha] = -h_alpha and N_{-a,-b} = N_{a,b}. Signs come from the
// extraspecial-pair convention over the canonical order.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& s);
    static const StructureConstants& get(Family f);

    const RootSystem& system() const { return *sys_; }
    // N_{a,b} for root ids; 0 when a+b is not a root
    int N(int a, int b) const { return table_[static_cast<std::size_t>(a) * sys_->nroots() + b]; }
    // Constants in a Chevalley basis e_alpha (N_{-a,-b} = -N_{a,b}), before the sign change
    int chevalley_N(int a, int b) const;

    nlohmann::json to_json() const;

private:
    const RootSystem* sys_;
    std::vector<int> table_;
};

// Real compact-form element: sum_k h[k] (i h_k) + sum a[alpha] A_alpha + sum b[alpha] B_alpha,
// where A_alpha = E_alpha + E_-alpha and B_alpha = i(E_alpha - E_-alpha), alpha > 0.
struct Element {
    const RootSystem* sys = nullptr;
    std::vector<Q> h;
    std::map<int, Q> a;
    std::map<int, Q> b;

    Element() = default;
    explicit Element(const RootSystem& s) : sys(&s), h(s.rank()) {}

    static Element A(const RootSystem& s, int pos_id, Q c = 1);
    static Element B(const RootSystem& s, int pos_id, Q c = 1);
    static Element iH(const RootSystem& s, int k, Q c = 1);

    bool is_zero() const;
    void normalize();
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Q& c);
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(const Q& c, Element x) { return x *= c; }
    bool operator==(const Element& o) const;

    // positive root ids carrying a nonzero A or B coefficient
    std::vector<int> support() const;
    std::string str() const;
};

Element bracket(const StructureConstants& t, const Element& x, const Element& y);

// Negative-definite invariant form with (A,A) = (B,B) = -2/d_alpha, (i h_i, i h_j) = -a_ij/d_j.
Q invariant_form(const Element& x, const Element& y);

nlohmann::json to_json(const Element& x);
Element element_from_json(const RootSystem& s, const nlohmann::json& j);

}  // namespace flagroots
