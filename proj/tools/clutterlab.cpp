// clutterlab: certify clutter and graph properties from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "clutterlab/cli.hpp"

using namespace clutterlab;
using namespace clutterlab::cli;

namespace {

int report(const Certificate& c, bool as_json)
{
    std::cout << (as_json ? emit(c) : summarize(c));
    return exit_code(c);
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : ", ") + x;
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact certificates for clutter and graph properties (Ehrhart, ideal, MFMC, TDI, Meyniel, "
                 "perfect) and Ehrhart-ring invariants.\nExit codes: 0 holds, 1 fails, 2 undecided, 64 usage."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "clutterlab 1.0 (certificate schema " + std::to_string(kSchemaVersion) + ")");

    bool as_json = false, timing = false, edge_clutter = false;
    std::string input, property, name, out_dir = ".";
    unsigned r = 3;
    std::optional<std::uint64_t> budget;
    ConjectureOptions conj;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "instance file (graph, clutter or system JSON)")->required();
        sub->add_flag("--json", as_json, "print the certificate as JSON");
        sub->add_flag("--timing", timing, "record wall time in the certificate");
        sub->add_flag("--edge-clutter", edge_clutter, "for graphs, use the edge clutter instead of the clique clutter");
        sub->add_option("--budget", budget, "step budget (default: CLUTTERLAB_BUDGET or 10^7)");
    };

    auto* check = app.add_subcommand("check", "decide one property: " + join(property_names()));
    check->add_option("property", property, "property name")->required()->check(CLI::IsMember(property_names()));
    check->add_option("-r,--powers", r, "powers checked by ntf and normal")->check(CLI::Range(1u, 6u));
    common(check);

    auto* inv = app.add_subcommand("invariants", "h-vector, a-invariant, regularity and their bounds");
    common(inv);

    auto* con = app.add_subcommand("conjecture", "ideal implies MFMC on seeded batches of perfect graphs");
    con->add_option("--families", conj.families, "comma separated: " + join(conjecture_families()))
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember(conjecture_families()));
    con->add_option("--max-n", conj.max_n, "largest vertex count (<= 9)")->check(CLI::Range(2, 9));
    con->add_option("--seed", conj.seed, "random seed");
    con->add_option("--count", conj.per_family, "instances per family");
    con->add_flag("--json", as_json, "print the certificate as JSON");
    con->add_flag("--timing", timing, "record wall time in the certificate");
    con->add_option("--budget", budget, "step budget per instance");

    auto* ex = app.add_subcommand("examples", "write an example instance and its certificate");
    ex->add_option("--name", name, "one of: " + join(example_names()) + " (D, G integers)");
    ex->add_option("--out", out_dir, "output directory");
    bool list = false;
    ex->add_flag("--list", list, "list example names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        CheckOptions opts{edge_clutter, r, timing, budget};
        if (*check)
            return report(run_check(property, load_instance(input), opts), as_json);
        if (*inv)
            return report(run_invariants(load_instance(input), opts), as_json);
        if (*con) {
            conj.timing = timing;
            conj.budget = budget;
            return report(run_conjecture(conj), as_json);
        }
        if (*ex) {
            if (list || name.empty()) {
                for (const auto& n : example_names())
                    std::cout << n << "\n";
                return name.empty() && !list ? exit_usage : 0;
            }
            const auto files = make_example(name);
            std::filesystem::create_directories(out_dir);
            for (const auto& f : files) {
                const auto path = std::filesystem::path(out_dir) / f.name;
                std::ofstream(path, std::ios::binary) << f.content;
                std::cout << path.string() << "\n";
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "clutterlab: " << e.what() << "\n";
        return exit_usage;
    } catch (const ResourceExceeded& e) {
        std::cerr << "clutterlab: " << e.what() << "\n";
        return exit_undecided;
    } catch (const std::exception& e) {
        std::cerr << "clutterlab: internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
