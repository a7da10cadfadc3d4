#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dglab/errors.hpp"
#include "dglab/scenario.hpp"

namespace {

struct Options {
    std::string config;
    std::string out = "out";
    int parallel = 1;
    unsigned seed = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config, "scenario config (JSON)")->required();
    cmd->add_option("--out", opt.out, "output directory");
    cmd->add_option("--parallel", opt.parallel, "worker threads for probe batches")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "rng seed (reserved; runs are deterministic)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenerate-parabolic PDE laboratory"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("DGLAB_OUT")) opt.out = env;

    const char* stage_names[] = {"solve",  "weights", "degiorgi", "harnack",
                                 "holder", "sweep-eps", "all"};
    const char* stage_help[] = {
        "solve the scenario and write the solution field",
        "weight-class hypotheses, constants and consequences",
        "truncated energy inequalities and required gamma",
        "harnack-type probes for the scenario regime",
        "oscillation decay and interface continuity fits",
        "regularization-parameter sweep and limit checks",
        "run every stage and emit the plots"};
    for (int k = 0; k < 7; ++k) add_common(app.add_subcommand(stage_names[k],
                                                              stage_help[k]), opt);

    CLI11_PARSE(app, argc, argv);

    std::string stage = app.get_subcommands().front()->get_name();
    try {
        dglab::Scenario sc = dglab::load_scenario(opt.config);
        dglab::run_scenario(sc, opt.out, {stage}, opt.parallel);
    } catch (const dglab::ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 2;
    } catch (const dglab::SolverError& ex) {
        std::cerr << "solver error: " << ex.what() << "\n";
        return 3;
    } catch (const dglab::ProbeError& ex) {
        std::cerr << "probe error: " << ex.what() << "\n";
        return 4;
    } catch (const dglab::ReportError& ex) {
        std::cerr << "report error: " << ex.what() << "\n";
        return 5;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
