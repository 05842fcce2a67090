#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flagroots/report.hpp"

using namespace flagroots;

namespace {

const char* kUsage =
    "flagroots <roots|table|check|enumerate|verify> <space> [options]\n"
    "  roots <space>                      R_K^+, R_M^+ and the module fibers\n"
    "  table <troots|dims|brackets> <space>\n"
    "  check <space> <family>             family as labels \"b3^3 b1^1\" or vectors \"(0,1,1,0) (1,1,1,1)\"\n"
    "  enumerate <space>                  maximal structural families\n"
    "  verify <space> <vector.json> [metric]\n"
    "spaces: F4_34 E6_36 E7_56 E8_12 G2_12, or TYPE:i,j (e.g. E6:1,3)";

bool is_table_kind(const std::string& s) { return s == "troots" || s == "dims" || s == "brackets"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{kUsage, "flagroots"};
    std::string command;
    std::vector<std::string> pos;
    std::string format = "text";
    bool check = false, verify_fixtures = false;
    int min_modules = 2;
    long long cap = -1;
    std::uint64_t seed = 0;
    std::string out;

    app.add_option("command", command, "roots | table | check | enumerate | verify")
        ->required()
        ->check(CLI::IsMember({"roots", "table", "check", "enumerate", "verify"}));
    app.add_option("args", pos, "space and command arguments")->required();
    app.add_option("--format", format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_flag("--check", check, "diff against the fixture; exit 1 on mismatch");
    app.add_flag("--verify-fixtures", verify_fixtures, "enumerate: every fixture family must be covered");
    app.add_option("--min-modules", min_modules, "enumerate: minimum number of modules per family");
    app.add_option("--cap", cap, "enumerate: stop after N families")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--out", out, "write the report to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        cfg.command = command;
        // "table dims E7_56" and "table E7_56 dims" are both accepted
        if (command == "table" && pos.size() >= 2 && is_table_kind(pos[0])) std::swap(pos[0], pos[1]);
        cfg.space = parse_space(pos[0]);
        cfg.args.assign(pos.begin() + 1, pos.end());
        if (command == "table" && cfg.args.size() != 1) throw InputError("table needs exactly one of troots, dims, brackets");
        if ((command == "roots" || command == "enumerate") && !cfg.args.empty())
            throw InputError("unexpected argument '" + cfg.args[0] + "'");
        if (command == "check" && cfg.args.size() != 1) throw InputError("check needs one family specification (quote it)");
        if (command == "verify" && (cfg.args.empty() || cfg.args.size() > 2)) throw InputError("verify needs <vector.json> [metric]");
        cfg.format = parse_format(format);
        cfg.check = check;
        cfg.verify_fixtures = verify_fixtures;
        if (verify_fixtures && command != "enumerate") throw InputError("--verify-fixtures applies to enumerate");
        cfg.min_modules = min_modules;
        if (cap >= 0) cfg.cap = static_cast<std::size_t>(cap);
        cfg.seed = seed;

        Report r = run(cfg);
        std::string text = render(r, cfg.format);
        if (!out.empty()) {
            std::ofstream f(out, std::ios::binary);
            if (!f) throw InputError("cannot write " + out);
            f << text;
        } else {
            std::cout << text;
        }
        return r.status;
    } catch (const InputError& e) {
        std::cerr << "flagroots: " << e.what() << '\n';
        return 2;
    }
}
