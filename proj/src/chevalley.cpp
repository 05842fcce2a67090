#include "flagroots/chevalley.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <mutex>
#include <sstream>

namespace flagroots {

namespace {

// Carter-style constants: N_{a,b} = +(p+1) on each extraspecial pair,
// everything else derived from the four-root and triple identities.
class CarterBuilder {
public:
    explicit CarterBuilder(const RootSystem& s) : s_(s), n_(s.npos()), memo_(n_ * n_, INT_MIN), extra_(n_, {-1, -1}) {
        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y) {
                int z = s_.sum(x, y);
                if (z >= 0 && extra_[z].first < 0) extra_[z] = {x, y};
            }
    }

    int general(int x, int y) {
        int z = s_.sum(x, y);
        if (z < 0) return 0;
        bool px = s_.positive(x), py = s_.positive(y);
        if (px && py) return pos(x, y);
        if (!px && !py) return -pos(s_.neg(x), s_.neg(y));
        if (!px) return -general(y, x);
        // x > 0 > y
        if (s_.positive(z)) return exact_div(s_.norm2(z) * -pos(s_.neg(y), z), s_.norm2(x));
        return exact_div(s_.norm2(z) * pos(s_.neg(z), x), s_.norm2(y));
    }

    int pos(int x, int y) {
        if (x > y) return -pos(y, x);
        int& slot = memo_[x * n_ + y];
        if (slot != INT_MIN) return slot;
        int xi = s_.sum(x, y);
        auto [a, b] = extra_[xi];
        int val;
        if (x == a) {
            val = s_.root_string(a, b).first + 1;
        } else {
            // four roots a + b - x - y = 0
            long long num = 0, den = 1;
            int bx = s_.sum(b, s_.neg(x)), ay = s_.sum(a, s_.neg(y));
            int ax = s_.sum(a, s_.neg(x)), by = s_.sum(b, s_.neg(y));
            long long t1n = 0, t1d = 1, t2n = 0, t2d = 1;
            if (bx >= 0 && ay >= 0) t1n = 1LL * general(b, s_.neg(x)) * general(a, s_.neg(y)), t1d = s_.norm2(bx);
            if (ax >= 0 && by >= 0) t2n = 1LL * general(s_.neg(x), a) * general(b, s_.neg(y)), t2d = s_.norm2(ax);
            num = t1n * t2d + t2n * t1d;
            den = t1d * t2d;
            int nab = s_.root_string(a, b).first + 1;
            num *= s_.norm2(xi);
            den *= nab;
            if (den == 0 || num % den != 0) throw std::logic_error("non-integral structure constant");
            val = static_cast<int>(num / den);
        }
        slot = val;
        return val;
    }

private:
    static int exact_div(int num, int den) {
        if (num % den != 0) throw std::logic_error("non-integral structure constant");
        return num / den;
    }

    const RootSystem& s_;
    int n_;
    std::vector<int> memo_;
    std::vector<std::pair<int, int>> extra_;
};

}  // namespace

StructureConstants::StructureConstants(const RootSystem& s) : sys_(&s) {
    const int N = s.nroots();
    table_.assign(static_cast<std::size_t>(N) * N, 0);
    CarterBuilder cb(s);
    auto sign = [&](int id) { return s.positive(id) ? 1 : -1; };
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int z = s.sum(x, y);
            if (z < 0) continue;
            table_[static_cast<std::size_t>(x) * N + y] = sign(x) * sign(y) * sign(z) * cb.general(x, y);
        }
}

const StructureConstants& StructureConstants::get(Family f) {
    static std::mutex mu;
    static std::map<Family, std::unique_ptr<StructureConstants>> cache;
    const RootSystem& s = RootSystem::get(f);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[f];
    if (!slot) slot = std::make_unique<StructureConstants>(s);
    return *slot;
}

int StructureConstants::chevalley_N(int a, int b) const {
    int z = sys_->sum(a, b);
    if (z < 0) return 0;
    auto sign = [&](int id) { return sys_->positive(id) ? 1 : -1; };
    return sign(a) * sign(b) * sign(z) * N(a, b);
}

nlohmann::json StructureConstants::to_json() const {
    nlohmann::json pairs = nlohmann::json::array();
    const RootSystem& s = *sys_;
    for (int x = 0; x < s.nroots(); ++x)
        for (int y = 0; y < s.nroots(); ++y)
            if (int n = N(x, y)) pairs.push_back({{"alpha", s.coeffs(x)}, {"beta", s.coeffs(y)}, {"N", n}});
    return {{"schema", 1}, {"family", to_string(s.family())}, {"convention", "E_-a,-b = E_a,b; [E_a,E_-a] = -h_a"}, {"pairs", pairs}};
}

Element Element::A(const RootSystem& s, int pos_id, Q c) {
    Element e(s);
    e.a[pos_id] = c;
    e.normalize();
    return e;
}

Element Element::B(const RootSystem& s, int pos_id, Q c) {
    Element e(s);
    e.b[pos_id] = c;
    e.normalize();
    return e;
}

Element Element::iH(const RootSystem& s, int k, Q c) {
    Element e(s);
    e.h[k] = c;
    return e;
}

bool Element::is_zero() const {
    for (const Q& x : h)
        if (sgn(x) != 0) return false;
    for (auto& [k, v] : a)
        if (sgn(v) != 0) return false;
    for (auto& [k, v] : b)
        if (sgn(v) != 0) return false;
    return true;
}

void Element::normalize() {
    std::erase_if(a, [](const auto& kv) { return sgn(kv.second) == 0; });
    std::erase_if(b, [](const auto& kv) { return sgn(kv.second) == 0; });
}

static void same_system(const Element& x, const Element& y) {
    if (x.sys != y.sys || !x.sys) throw InputError("elements belong to different root systems");
}

Element& Element::operator+=(const Element& o) {
    same_system(*this, o);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += o.h[k];
    for (auto& [k, v] : o.a) a[k] += v;
    for (auto& [k, v] : o.b) b[k] += v;
    normalize();
    return *this;
}

Element& Element::operator-=(const Element& o) {
    same_system(*this, o);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] -= o.h[k];
    for (auto& [k, v] : o.a) a[k] -= v;
    for (auto& [k, v] : o.b) b[k] -= v;
    normalize();
    return *this;
}

Element& Element::operator*=(const Q& c) {
    for (Q& x : h) x *= c;
    for (auto& [k, v] : a) v *= c;
    for (auto& [k, v] : b) v *= c;
    normalize();
    return *this;
}

bool Element::operator==(const Element& o) const {
    if (sys != o.sys) return false;
    Element d = *this;
    d -= o;
    return d.is_zero();
}

std::vector<int> Element::support() const {
    std::vector<int> out;
    for (auto& [k, v] : a) out.push_back(k);
    for (auto& [k, v] : b)
        if (!a.count(k)) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Q& c, const std::string& name) {
        if (sgn(c) == 0) return;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Q m = abs(c);
        if (m != 1) os << m.get_str() << "*";
        os << name;
    };
    auto root_name = [&](int id) {
        std::string s = "[";
        for (std::size_t i = 0; i < sys->coeffs(id).size(); ++i) s += (i ? "," : "") + std::to_string(sys->coeffs(id)[i]);
        return s + "]";
    };
    for (std::size_t k = 0; k < h.size(); ++k) term(h[k], "iH" + std::to_string(k + 1));
    for (auto& [k, v] : a) term(v, "A" + root_name(k));
    for (auto& [k, v] : b) term(v, "B" + root_name(k));
    return os.str();
}

namespace {

// adds c * A_gamma (kind 0) or c * B_gamma (kind 1) for an arbitrary root id gamma
void add_root(Element& r, int kind, int gamma, const Q& c) {
    const RootSystem& s = *r.sys;
    int p = s.abs_id(gamma);
    if (kind == 0) r.a[p] += c;
    else if (s.positive(gamma)) r.b[p] += c;
    else r.b[p] -= c;
}

// [X_x, Y_y] for basis vectors; kinds 0 = A, 1 = B
void basis_bracket(const StructureConstants& t, int kx, int x, int ky, int y, const Q& c, Element& r) {
    const RootSystem& s = t.system();
    if (kx == 1 && ky == 0) {
        basis_bracket(t, ky, y, kx, x, -c, r);
        return;
    }
    if (x == y) {
        if (kx == ky) return;
        // [A_a, B_a] = 2 i h_a
        const Coeffs& h = s.coroot(x);
        for (int k = 0; k < s.rank(); ++k) r.h[k] += 2 * c * h[k];
        return;
    }
    int sum = s.sum(x, y);
    int diff = s.sum(x, s.neg(y));
    int nsum = sum >= 0 ? t.N(x, y) : 0;
    int ndiff = diff >= 0 ? t.N(x, s.neg(y)) : 0;
    if (kx == 0 && ky == 0) {
        if (nsum) add_root(r, 0, sum, c * nsum);
        if (ndiff) add_root(r, 0, diff, c * ndiff);
    } else if (kx == 1 && ky == 1) {
        if (nsum) add_root(r, 0, sum, -c * nsum);
        if (ndiff) add_root(r, 0, diff, c * ndiff);
    } else {
        if (nsum) add_root(r, 1, sum, c * nsum);
        if (ndiff) add_root(r, 1, diff, -c * ndiff);
    }
}

}  // namespace

Element bracket(const StructureConstants& t, const Element& x, const Element& y) {
    same_system(x, y);
    if (x.sys != &t.system()) throw InputError("element does not match the structure constant table");
    const RootSystem& s = t.system();
    Element r(s);
    // Cartan against root vectors
    auto cartan_root = [&](const std::vector<Q>& hc, const Element& other, const Q& sign) {
        for (int k = 0; k < s.rank(); ++k) {
            if (sgn(hc[k]) == 0) continue;
            for (auto& [p, v] : other.a) {
                int w = s.pairing(s.coeffs(p), k);
                if (w) r.b[p] += sign * hc[k] * v * w;
            }
            for (auto& [p, v] : other.b) {
                int w = s.pairing(s.coeffs(p), k);
                if (w) r.a[p] -= sign * hc[k] * v * w;
            }
        }
    };
    cartan_root(x.h, y, 1);
    cartan_root(y.h, x, -1);
    for (auto& [p, u] : x.a) {
        for (auto& [q, v] : y.a) basis_bracket(t, 0, p, 0, q, u * v, r);
        for (auto& [q, v] : y.b) basis_bracket(t, 0, p, 1, q, u * v, r);
    }
    for (auto& [p, u] : x.b) {
        for (auto& [q, v] : y.a) basis_bracket(t, 1, p, 0, q, u * v, r);
        for (auto& [q, v] : y.b) basis_bracket(t, 1, p, 1, q, u * v, r);
    }
    r.normalize();
    return r;
}

namespace {

Q frac(long n, long d) {
    Q q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

Q invariant_form(const Element& x, const Element& y) {
    same_system(x, y);
    const RootSystem& s = *x.sys;
    const auto& c = s.cartan();
    Q out = 0;
    for (int i = 0; i < s.rank(); ++i)
        for (int j = 0; j < s.rank(); ++j)
            if (c.a[i][j]) out -= x.h[i] * y.h[j] * frac(c.a[i][j], c.d[j]);
    for (auto& [p, v] : x.a) {
        auto it = y.a.find(p);
        if (it != y.a.end()) out -= v * it->second * frac(4, s.norm2(p));
    }
    for (auto& [p, v] : x.b) {
        auto it = y.b.find(p);
        if (it != y.b.end()) out -= v * it->second * frac(4, s.norm2(p));
    }
    return out;
}

nlohmann::json to_json(const Element& x) {
    nlohmann::json h = nlohmann::json::array(), a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const Q& v : x.h) h.push_back(v.get_str());
    for (auto& [p, v] : x.a) a.push_back({{"root", x.sys->coeffs(p)}, {"coeff", v.get_str()}});
    for (auto& [p, v] : x.b) b.push_back({{"root", x.sys->coeffs(p)}, {"coeff", v.get_str()}});
    return {{"cartan", h}, {"A", a}, {"B", b}};
}

static Q parse_q(const nlohmann::json& v) {
    if (v.is_number_integer()) return Q(v.get<long>());
    if (v.is_string()) {
        Q q;
        if (q.set_str(v.get<std::string>(), 10) != 0) throw InputError("bad rational: " + v.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw InputError("coefficient must be an integer or a rational string");
}

Element element_from_json(const RootSystem& s, const nlohmann::json& j) {
    Element e(s);
    if (j.contains("cartan")) {
        auto& h = j.at("cartan");
        if (static_cast<int>(h.size()) != s.rank()) throw InputError("cartan part has wrong length");
        for (int k = 0; k < s.rank(); ++k) e.h[k] = parse_q(h[k]);
    }
    for (const char* key : {"A", "B"}) {
        if (!j.contains(key)) continue;
        for (auto& t : j.at(key)) {
            Coeffs c = t.at("root").get<Coeffs>();
            if (static_cast<int>(c.size()) != s.rank()) throw InputError("root has wrong length");
            int id = s.find(c);
            if (id < 0 || !s.positive(id)) throw InputError("not a positive root");
            (key[0] == 'A' ? e.a : e.b)[id] += parse_q(t.at("coeff"));
        }
    }
    e.normalize();
    return e;
}

}  // namespace flagroots
