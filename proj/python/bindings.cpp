#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagroots/report.hpp"

namespace py = pybind11;
using namespace flagroots;

namespace {

Family family(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw InputError("unknown Lie type '" + s + "'");
    return *f;
}

FlagSpace space(const std::string& s) {
    SpaceId id = parse_space(s);
    return make_flag_space(RootSystem::get(id.family), id.painted);
}

std::vector<int> ids_of(const FlagSpace& fs, const std::vector<Coeffs>& roots) {
    std::vector<int> ids;
    for (auto& c : roots) {
        int id = fs.sys().find(c);
        if (id < 0 || !fs.sys().positive(id) || fs.module_of[id] < 0) throw InputError(coeff_string(c) + " is not in R_M^+");
        ids.push_back(id);
    }
    return ids;
}

}  // namespace

PYBIND11_MODULE(_flagroots, m) {
    m.doc() = "exact root data, brackets and structural families on G2-type flag manifolds";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def("positive_roots", [](const std::string& t) { return RootSystem::get(family(t)).positive_roots(); });
    m.def("highest_root", [](const std::string& t) { return RootSystem::get(family(t)).highest_root(); });
    m.def("cartan", [](const std::string& t) { return RootSystem::get(family(t)).cartan().a; });
    m.def(
        "structure_constant",
        [](const std::string& t, const Coeffs& a, const Coeffs& b) {
            const RootSystem& s = RootSystem::get(family(t));
            int x = s.find(a), y = s.find(b);
            if (x < 0 || y < 0) throw InputError("not a root");
            return StructureConstants::get(s.family()).N(x, y);
        },
        py::arg("type"), py::arg("alpha"), py::arg("beta"));

    m.def("modules", [](const std::string& sp) {
        FlagSpace fs = space(sp);
        std::vector<std::vector<Coeffs>> out;
        for (auto& mod : fs.modules) {
            std::vector<Coeffs> r;
            for (int id : mod.roots) r.push_back(fs.sys().coeffs(id));
            out.push_back(std::move(r));
        }
        return out;
    });
    m.def("is_structural_family", [](const std::string& sp, const std::vector<Coeffs>& roots) {
        FlagSpace fs = space(sp);
        return is_structural_family(fs, ids_of(fs, roots));
    });
    m.def("is_equigeodesic_all_metrics", [](const std::string& sp, const std::vector<Coeffs>& roots) {
        FlagSpace fs = space(sp);
        Element x(fs.sys());
        for (int id : ids_of(fs, roots)) x += Element::A(fs.sys(), id) + Element::B(fs.sys(), id);
        return is_equigeodesic_all_metrics(StructureConstants::get(fs.sys().family()), fs, x);
    });
    m.def(
        "enumerate_maximal_families",
        [](const std::string& sp, int min_modules, std::optional<std::size_t> cap) {
            FlagSpace fs = space(sp);
            EnumOptions o;
            o.min_modules = min_modules;
            o.cap = cap;
            EnumResult r;
            {
                py::gil_scoped_release release;
                r = enumerate_maximal_families(fs, o);
            }
            std::vector<std::vector<Coeffs>> out;
            for (auto& f : r.families) {
                std::vector<Coeffs> c;
                for (int id : f) c.push_back(fs.sys().coeffs(id));
                out.push_back(std::move(c));
            }
            return py::make_tuple(out, r.truncated);
        },
        py::arg("space"), py::arg("min_modules") = 2, py::arg("cap") = py::none());

    m.def(
        "run",
        [](const std::string& command, const std::string& sp, const std::vector<std::string>& args, const std::string& format,
           bool check, bool verify_fixtures, int min_modules, std::optional<std::size_t> cap, std::uint64_t seed,
           std::optional<std::string> fixtures) {
            RunConfig cfg;
            cfg.command = command;
            cfg.space = parse_space(sp);
            cfg.args = args;
            cfg.format = parse_format(format);
            cfg.check = check;
            cfg.verify_fixtures = verify_fixtures;
            cfg.min_modules = min_modules;
            cfg.cap = cap;
            cfg.seed = seed;
            if (fixtures) cfg.fixtures = *fixtures;
            Report r = run(cfg);
            return py::make_tuple(r.status, render(r, cfg.format));
        },
        py::arg("command"), py::arg("space"), py::arg("args") = std::vector<std::string>{}, py::arg("format") = "json",
        py::arg("check") = false, py::arg("verify_fixtures") = false, py::arg("min_modules") = 2, py::arg("cap") = py::none(),
        py::arg("seed") = 0, py::arg("fixtures") = py::none());
}
