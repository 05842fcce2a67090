#include <algorithm>
#include <cctype>
#include <charconv>

#include "flagroots/fixtures.hpp"

namespace flagroots {

std::vector<SpaceId> named_spaces() {
    return {
        {"F4_34", Family::F4, {3, 4}, false},
        {"E6_36", Family::E6, {3, 6}, false},
        {"E7_56", Family::E7, {5, 6}, false},
        {"E8_12", Family::E8, {1, 2}, false},
        {"G2_12", Family::G2, {1, 2}, false},
    };
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad integer: " + std::string(s));
    return v;
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

SpaceId parse_space(std::string_view s) {
    for (auto& sp : named_spaces())
        if (sp.name == s) return sp;
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw InputError("unknown space '" + std::string(s) + "' (expected F4_34, E6_36, E7_56, E8_12, G2_12 or TYPE:i,j)");
    auto fam = parse_family(s.substr(0, colon));
    if (!fam) throw InputError("unknown Lie type in '" + std::string(s) + "'");
    SpaceId id{std::string(s), *fam, {}, true};
    std::string_view rest = s.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        id.painted.push_back(parse_int(trim(rest.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (id.painted.empty()) throw InputError("custom space needs at least one painted node");
    int rank = lie_type(*fam).rank;
    for (int i : id.painted)
        if (i < 1 || i > rank) throw InputError("painted node out of range in '" + std::string(s) + "'");
    std::sort(id.painted.begin(), id.painted.end());
    for (auto& sp : named_spaces())
        if (sp.family == id.family && sp.painted == id.painted) return sp;
    return id;
}

std::vector<Label> parse_labels(std::string_view spec) {
    std::vector<Label> out;
    std::string buf(spec);
    for (char& c : buf)
        if (c == ',' || c == '+') c = ' ';
    std::string_view rest = buf;
    while (true) {
        while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
        if (rest.empty()) break;
        auto sp = rest.find(' ');
        std::string_view tok = rest.substr(0, sp);
        rest = sp == std::string_view::npos ? std::string_view() : rest.substr(sp);
        if (tok.size() < 4 || (tok[0] != 'b' && tok[0] != 'B')) throw InputError("bad label '" + std::string(tok) + "'");
        auto caret = tok.find('^');
        if (caret == std::string_view::npos) throw InputError("bad label '" + std::string(tok) + "'");
        std::string_view idx = tok.substr(1, caret - 1);
        int module = parse_int(tok.substr(caret + 1));
        int lo, hi;
        if (auto dots = idx.find(".."); dots != std::string_view::npos) {
            lo = parse_int(idx.substr(0, dots));
            hi = parse_int(idx.substr(dots + 2));
        } else {
            lo = hi = parse_int(idx);
        }
        if (lo < 1 || hi < lo || module < 1) throw InputError("bad label '" + std::string(tok) + "'");
        for (int i = lo; i <= hi; ++i) out.emplace_back(module, i);
    }
    if (out.empty()) throw InputError("empty family specification");
    return out;
}

}  // namespace flagroots
