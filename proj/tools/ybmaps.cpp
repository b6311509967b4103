// Command-line front end: seeded verification runs and chain evolution with
// JSON reports.
//
//   ybmaps verify yb --map adler --mode exact --trials 1000 --seed 7
//   ybmaps chain conserve --map crystal --sites 4 --steps 100
//
// Exit status: 0 all trials pass, 1 some trial fails, 2 configuration or
// generation error.

#include <yb/harness/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>

namespace {

void add_common(CLI::App* cmd, yb::harness::RunConfig& cfg, double& tol) {
    cmd->add_option("--map", cfg.map, "Map: adler, soliton, crystal, adler-perturbed, flip, shift")
        ->check(CLI::IsMember(yb::harness::known_maps()));
    cmd->add_option("--mode", cfg.mode, "Scalar backend")->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--trials", cfg.trials, "Number of random instances (chains for chain runs)")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    cmd->add_option("--tol", tol, "Relative tolerance in float mode")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "64-bit seed");
    cmd->add_option("--dim", cfg.dim, "Vector dimension: N for soliton, n for crystal");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Baxter map verification harness"};
    app.require_subcommand(1);

    yb::harness::RunConfig cfg;
    double tol = 0.0;
    std::string out_path;
    app.add_option("--out", out_path, "Write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check an identity on random instances");
    std::string check;
    verify->add_option("check", check, "yb | reversibility | lax | lax-dual | projective-form")
        ->required()
        ->check(CLI::IsMember({"yb", "reversibility", "lax", "lax-dual", "projective-form"}));
    add_common(verify, cfg, tol);
    verify->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* chain = app.add_subcommand("chain", "Evolve periodic chains and track their integrals");
    std::string action;
    chain->add_option("action", action, "conserve")->required()->check(CLI::IsMember({"conserve"}));
    add_common(chain, cfg, tol);
    bool trials_given = false;
    chain->add_option("--sites", cfg.sites, "Chain length")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    chain->add_option("--steps", cfg.steps, "Transfer steps per chain");
    chain->add_option("--zeta-samples", cfg.zeta_samples, "Spectral samples per chain")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    chain->add_option("--out", out_path, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (chain->parsed()) {
        cfg.check = "chain-conserve";
        trials_given = chain->count("--trials") > 0;
        if (!trials_given) cfg.trials = 1;
    } else {
        cfg.check = check;
    }
    if (tol > 0.0) cfg.tol = tol;

    const auto outcome = yb::harness::run(cfg);
    const std::string text = outcome.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    if (outcome.exit_code == 2) std::cerr << outcome.report["summary"]["error"].get<std::string>() << "\n";
    return outcome.exit_code;
}
