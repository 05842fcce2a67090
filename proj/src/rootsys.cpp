#include "flagroots/rootsys.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace flagroots {

LieType lie_type(Family f) {
    switch (f) {
        case Family::G2: return {f, 2};
        case Family::F4: return {f, 4};
        case Family::E6: return {f, 6};
        case Family::E7: return {f, 7};
        case Family::E8: return {f, 8};
    }
    throw InputError("unknown Lie type");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    static const std::array<std::pair<std::string_view, Family>, 5> names{{
        {"G2", Family::G2}, {"F4", Family::F4}, {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}}};
    for (auto& [n, f] : names)
        if (s == n) return f;
    return std::nullopt;
}

namespace {

std::vector<std::vector<int>> from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
    return a;
}

}  // namespace

std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw InputError("Cartan matrix is not square");
        if (a[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw InputError("Cartan matrix off-diagonal entries must be nonpositive");
            if ((a[i][j] == 0) != (a[j][i] == 0)) throw InputError("Cartan matrix zero pattern is not symmetric");
        }
    }
    // d as num/den, propagated along edges of each connected component
    std::vector<long long> num(n, 0), den(n, 1);
    for (int s = 0; s < n; ++s) {
        if (num[s] != 0) continue;
        num[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (j == i || a[i][j] == 0 || num[j] != 0) continue;
                num[j] = num[i] * a[i][j];
                den[j] = den[i] * a[j][i];
                if (den[j] < 0) num[j] = -num[j], den[j] = -den[j];
                long long g = std::gcd(num[j], den[j]);
                num[j] /= g, den[j] /= g;
                stack.push_back(j);
            }
        }
    }
    long long l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
    std::vector<long long> d(n);
    long long g = 0;
    for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]), g = std::gcd(g, d[i]);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i] / g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out[i] * a[i][j] != out[j] * a[j][i]) throw InputError("Cartan matrix is not symmetrizable");
    return out;
}

CartanMatrix cartan_matrix(Family f) {
    CartanMatrix c;
    switch (f) {
        case Family::G2:
            c.a = {{2, -3}, {-1, 2}};
            break;
        case Family::F4:
            c.a = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            break;
        case Family::E6:
            c.a = from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
            break;
        case Family::E7:
            c.a = from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}});
            break;
        case Family::E8:
            c.a = from_edges(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
            break;
    }
    c.d = symmetrizer(c.a);
    return c;
}

int height(const Coeffs& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool canonical_less(const Coeffs& x, const Coeffs& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
}

std::vector<Coeffs> generate_positive_roots(const CartanMatrix& c) {
    const int n = c.rank();
    if (n == 0) throw InputError("empty Cartan matrix");
    symmetrizer(c.a);
    const std::size_t bound = std::max<std::size_t>(120, static_cast<std::size_t>(n) * n);

    std::set<Coeffs> seen;
    std::vector<Coeffs> level;
    for (int i = 0; i < n; ++i) {
        Coeffs e(n, 0);
        e[i] = 1;
        level.push_back(e);
        seen.insert(e);
    }
    while (!level.empty()) {
        std::set<Coeffs> next;
        for (const Coeffs& b : level) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Coeffs down = b;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < n; ++j) pair += b[j] * c.a[i][j];
                if (p - pair > 0) {
                    Coeffs up = b;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        for (const Coeffs& r : next) seen.insert(r);
        if (seen.size() > bound) throw InputError("Cartan matrix is not of finite type");
        level.assign(next.begin(), next.end());
    }
    std::vector<Coeffs> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

RootSystem::RootSystem(Family f) : family_(f), cartan_(cartan_matrix(f)) {
    pos_ = generate_positive_roots(cartan_);
    const int n = npos(), l = rank();
    all_ = pos_;
    for (const Coeffs& r : pos_) {
        Coeffs m = r;
        for (int& x : m) x = -x;
        all_.push_back(m);
    }
    for (int i = 0; i < nroots(); ++i) index_.emplace(all_[i], i);
    for (int i = 0; i < l; ++i) {
        Coeffs e(l, 0);
        e[i] = 1;
        simple_.push_back(find(e));
    }
    norm2_.resize(n);
    coroot_.resize(n);
    for (int i = 0; i < n; ++i) {
        norm2_[i] = form(pos_[i], pos_[i]);
        // h_alpha = sum_j c_j (|alpha_j|^2 / |alpha|^2) h_j
        Coeffs h(l);
        for (int j = 0; j < l; ++j) {
            int num = pos_[i][j] * 2 * cartan_.d[j];
            if (num % norm2_[i] != 0) throw std::logic_error("coroot is not integral");
            h[j] = num / norm2_[i];
        }
        coroot_[i] = std::move(h);
    }
    const int N = nroots();
    sum_.assign(static_cast<std::size_t>(N) * N, -1);
    Coeffs s(l);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            for (int k = 0; k < l; ++k) s[k] = all_[a][k] + all_[b][k];
            sum_[static_cast<std::size_t>(a) * N + b] = find(s);
        }
}

const RootSystem& RootSystem::get(Family f) {
    static std::mutex mu;
    static std::map<Family, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[f];
    if (!slot) slot = std::make_unique<RootSystem>(f);
    return *slot;
}

void RootSystem::check_len(const Coeffs& v) const {
    if (static_cast<int>(v.size()) != rank())
        throw InputError("dimension mismatch: expected vector of length " + std::to_string(rank()));
}

int RootSystem::find(const Coeffs& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Coeffs& v) const {
    check_len(v);
    return find(v) >= 0;
}

int RootSystem::sum(int a, int b) const { return sum_[static_cast<std::size_t>(a) * nroots() + b]; }

int RootSystem::form(const Coeffs& x, const Coeffs& y) const {
    const auto& A = cartan_.a;
    int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < rank(); ++j) s += x[i] * cartan_.d[i] * A[i][j] * y[j];
    }
    return s;
}

int RootSystem::pairing(const Coeffs& beta, int k) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += beta[j] * cartan_.a[k][j];
    return s;
}

std::pair<int, int> RootSystem::root_string(int a, int b) const {
    if (a == b || a == neg(b)) throw InputError("root string undefined for beta = +-alpha");
    const Coeffs& x = coeffs(a);
    int p = 0, q = 0;
    Coeffs v = coeffs(b);
    while (true) {
        for (int k = 0; k < rank(); ++k) v[k] -= x[k];
        if (find(v) < 0) break;
        ++p;
    }
    v = coeffs(b);
    while (true) {
        for (int k = 0; k < rank(); ++k) v[k] += x[k];
        if (find(v) < 0) break;
        ++q;
    }
    return {p, q};
}

nlohmann::json RootSystem::to_json() const {
    return {{"schema", 1},
            {"family", to_string(family_)},
            {"rank", rank()},
            {"cartan", cartan_.a},
            {"positive_roots", pos_}};
}

std::vector<Coeffs> roots_from_json(const nlohmann::json& j) {
    if (!j.contains("positive_roots")) throw InputError("missing positive_roots");
    return j.at("positive_roots").get<std::vector<Coeffs>>();
}

}  // namespace flagroots
