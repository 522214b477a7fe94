#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torlim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"torlim: exact left derived functors of tensor on finitely presented abelian groups"};
    app.require_subcommand(1);

    torlim::cli::CommonOptions common;
    torlim::cli::VerifyOptions verify;

    std::string a_path, b_path, module_path, map_path, param_path;

    auto add_common = [&](CLI::App* cmd, bool with_degree) {
        if (with_degree) cmd->add_option("-n,--degree", common.degree, "homological degree");
        cmd->add_option("-k,--family-size", common.family_size, "resolution family size");
        cmd->add_option("-s,--seed", common.seed, "deterministic seed");
        cmd->add_flag("--json", common.json, "emit the machine-readable report");
        cmd->add_flag("-v,--verbose", common.verbose, "include family, isomorphisms and limit data");
    };

    CLI::App* tor = app.add_subcommand("tor", "compute Tor_n(A, B) as the derived object of -⊗B at A");
    tor->add_option("A", a_path, "module presentation file")->required();
    tor->add_option("B", b_path, "parameter module presentation file")->required();
    add_common(tor, true);

    CLI::App* resolve = app.add_subcommand("resolve", "list the canonical resolution family of a module");
    resolve->add_option("MODULE", module_path, "module presentation file")->required();
    add_common(resolve, false);

    CLI::App* map_cmd = app.add_subcommand("map", "compute the derived map of a module map for -⊗B");
    map_cmd->add_option("MAP", map_path, "map file (modules plus a map block)")->required();
    map_cmd->add_option("B", param_path, "parameter module presentation file")->required();
    add_common(map_cmd, true);

    CLI::App* ver = app.add_subcommand("verify", "run the verification suites over a seeded corpus");
    ver->add_option("-s,--seed", verify.seed, "deterministic seed");
    ver->add_option("-c,--cases", verify.cases, "cases per suite");
    ver->add_option("--entry-bound", verify.entry_bound, "presentation entry bound");
    ver->add_option("--order-bound", verify.order_bound, "node order bound for limit diagrams");
    ver->add_option("-k,--family-size", verify.family_size, "resolution family size");
    ver->add_flag("--inject-fault", verify.inject_fault,
                  "tamper one canonical isomorphism to demonstrate the checker (test-only)");
    ver->add_flag("--json", verify.json, "emit the machine-readable report");

    CLI11_PARSE(app, argc, argv);

    if (tor->parsed()) return torlim::cli::run_tor(a_path, b_path, common, std::cout, std::cerr);
    if (resolve->parsed()) return torlim::cli::run_resolve(module_path, common, std::cout, std::cerr);
    if (map_cmd->parsed()) return torlim::cli::run_map(map_path, param_path, common, std::cout, std::cerr);
    if (ver->parsed()) return torlim::cli::run_verify(verify, std::cout, std::cerr);
    return torlim::cli::kExitInputError;
}
