#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "supercoind/harness/catalog.hpp"
#include "supercoind/harness/checks.hpp"
#include "supercoind/harness/export.hpp"

using namespace supercoind;
using namespace supercoind::harness;

namespace {

// "-" reads standard input, "catalog:<name>" a built-in definition.
Definition load(const std::string& source) {
    const std::string prefix = "catalog:";
    if (source.rfind(prefix, 0) == 0) {
        auto cat = catalog();
        const Definition* d = find_catalog(cat, source.substr(prefix.size()));
        if (d == nullptr) throw std::invalid_argument("no catalog entry '" + source.substr(prefix.size()) + "'");
        return *d;
    }
    if (source == "-") return parse_definition(std::cin);
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open '" + source + "'");
    return parse_definition(in);
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        for (std::string tok; std::getline(ss, tok, ',');)
            if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced and coinduced representations of restricted Lie superalgebras over F_p"};
    app.require_subcommand(1);

    std::string source;
    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a definition");
    validate_cmd->add_option("file", source, "definition file, '-' or catalog:<name>")->required();

    CheckOptions opt;
    std::vector<std::string> only;
    bool json = false, timing = false, negative = false;
    auto* check_cmd = app.add_subcommand("check", "run identity checks on a definition");
    check_cmd->add_option("file", source, "definition file, '-' or catalog:<name>")->required();
    check_cmd->add_option("--only", only, "comma-separated check names");
    check_cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    check_cmd->add_option("--level", opt.level, "truncation level r for unrestricted checks");
    check_cmd->add_option("--samples", opt.samples, "samples per sampled check");
    check_cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    check_cmd->add_flag("--json", json, "machine-readable report");
    check_cmd->add_flag("--timing", timing, "include timings");
    check_cmd->add_flag("--negative-control", negative, "use +strad in omega-iso (expected to fail)");

    bool list = false;
    std::string dump;
    auto* catalog_cmd = app.add_subcommand("catalog", "built-in definitions");
    catalog_cmd->add_flag("--list", list, "list names");
    catalog_cmd->add_option("--dump", dump, "print a definition");

    std::string what, split, rep;
    auto* export_cmd = app.add_subcommand("export", "dump a table");
    export_cmd->add_option("file", source, "definition file, '-' or catalog:<name>")->required();
    export_cmd->add_option("--what", what, "multiplication|coproduct|phi-matrix|psi-gram")->required();
    export_cmd->add_option("--split", split, "split for matrix tables");
    export_cmd->add_option("--rep", rep, "representation for matrix tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) {
            Definition d = load(source);
            auto g = build_algebra(d);
            for (const auto& rd : d.reps) {
                SubalgebraSplit s = build_split(d, g, find_split(d, rd.split));
                if (Verdict v = validate_representation(s, build_representation(d, s, rd), g->has_p_map()); !v) {
                    std::cerr << "representation " << rd.name << ": " << v.witness << '\n';
                    return 1;
                }
            }
            std::cout << "ok " << d.name << " p=" << d.p << " dim=" << g->dim() << " (" << g->n_even() << "|"
                      << g->n_odd() << ") splits=" << d.splits.size() << " representations=" << d.reps.size()
                      << (g->has_p_map() ? " restricted" : " unrestricted") << '\n';
            return 0;
        }
        if (*check_cmd) {
            Definition d = load(source);
            opt.only = split_list(only);
            if (negative) opt.strad_sign = 1;
            auto reports = run_checks(d, opt);
            if (json)
                std::cout << to_json(reports, timing).dump(2) << '\n';
            else
                std::cout << to_text(reports, timing);
            return all_passed(reports) ? 0 : 1;
        }
        if (*catalog_cmd) {
            auto cat = catalog();
            if (!dump.empty()) {
                const Definition* d = find_catalog(cat, dump);
                if (d == nullptr) {
                    std::cerr << "no catalog entry '" << dump << "'\n";
                    return 2;
                }
                std::cout << dump_definition(*d);
                return 0;
            }
            for (const auto& d : cat) {
                std::cout << d.name;
                if (!list)
                    for (const auto& r : d.reps) std::cout << "  " << r.split << "/" << r.name;
                std::cout << '\n';
            }
            return 0;
        }
        if (*export_cmd) {
            std::cout << export_table(load(source), what, split, rep);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return std::string_view(e.what()).rfind("validation:", 0) == 0 ? 1 : 2;
    }
    return 0;
}
