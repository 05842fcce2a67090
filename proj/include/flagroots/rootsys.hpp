#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace flagroots {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family { G2, F4, E6, E7, E8 };

struct LieType {
    Family family;
    int rank;
};

LieType lie_type(Family f);
std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

using Coeffs = std::vector<int>;

struct CoeffsHash {
    std::size_t operator()(const Coeffs& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 64)) * 0x100000001b3ULL;
        return h;
    }
};

struct CartanMatrix {
    std::vector<std::vector<int>> a;  // a[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> d;               // d[i] * a[i][j] symmetric, d[i] = |alpha_i|^2 / 2

    int rank() const { return static_cast<int>(a.size()); }
};

// Hard-coded matrices in the node order used throughout (F4 nodes 1,2 short; E-series
// branch node attached to node 3, 4, 5 for E6, E7, E8 respectively).
CartanMatrix cartan_matrix(Family f);

// Builds the symmetrizer for an arbitrary matrix; throws InputError if none exists.
std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a);

// Height-by-height closure; throws InputError when the matrix is not of finite type.
std::vector<Coeffs> generate_positive_roots(const CartanMatrix& c);

bool canonical_less(const Coeffs& x, const Coeffs& y);
int height(const Coeffs& v);

// Root ids: 0..n-1 are the positive roots in canonical order, n..2n-1 their negatives.
class RootSystem {
public:
    explicit RootSystem(Family f);
    RootSystem(const RootSystem&) = delete;
    RootSystem& operator=(const RootSystem&) = delete;

    static const RootSystem& get(Family f);

    Family family() const { return family_; }
    int rank() const { return cartan_.rank(); }
    const CartanMatrix& cartan() const { return cartan_; }
    int npos() const { return static_cast<int>(pos_.size()); }
    int nroots() const { return 2 * npos(); }
    const std::vector<Coeffs>& positive_roots() const { return pos_; }
    const Coeffs& highest_root() const { return pos_.back(); }
    const Coeffs& marks() const { return pos_.back(); }

    const Coeffs& coeffs(int id) const { return all_[id]; }
    bool positive(int id) const { return id < npos(); }
    int neg(int id) const { return id < npos() ? id + npos() : id - npos(); }
    int abs_id(int id) const { return id < npos() ? id : id - npos(); }
    int simple(int i) const { return simple_[i]; }

    int find(const Coeffs& v) const;
    bool is_root(const Coeffs& v) const;
    // id of coeffs(a)+coeffs(b), or -1
    int sum(int a, int b) const;

    // (x, y) for the invariant form normalized so that short roots of G2/F4 and all
    // roots of E-types have (alpha, alpha) = 2.
    int form(const Coeffs& x, const Coeffs& y) const;
    int norm2(int id) const { return norm2_[abs_id(id)]; }
    // beta(h_k) = <beta, alpha_k^vee>
    int pairing(const Coeffs& beta, int k) const;
    // coordinates of the coroot h_alpha over the simple coroots h_1..h_l
    const Coeffs& coroot(int pos_id) const { return coroot_[pos_id]; }

    // p = max k with b - k a in R, q = max k with b + k a in R
    std::pair<int, int> root_string(int a, int b) const;

    nlohmann::json to_json() const;

private:
    void check_len(const Coeffs& v) const;

    Family family_;
    CartanMatrix cartan_;
    std::vector<Coeffs> pos_;
    std::vector<Coeffs> all_;
    std::vector<int> simple_;
    std::vector<int> norm2_;
    std::vector<Coeffs> coroot_;
    std::unordered_map<Coeffs, int, CoeffsHash> index_;
    std::vector<int> sum_;  // nroots x nroots
};

std::vector<Coeffs> roots_from_json(const nlohmann::json& j);

}  // namespace flagroots
