#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "heatkern/config.hpp"
#include "heatkern/errors.hpp"
#include "heatkern/runner.hpp"

namespace {

struct SubArgs {
    std::string config_path;
    int threads = 0;
    double tol = 0.0;
    long kmax = -1;
    std::string out;
};

void add_common(CLI::App* sub, SubArgs& a) {
    sub->add_option("config", a.config_path, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--threads", a.threads, "worker threads (overrides config)");
    sub->add_option("--tol", a.tol, "tolerance (overrides config)");
    sub->add_option("--kmax", a.kmax, "mode cutoff (overrides config)");
    sub->add_option("--out", a.out, "output CSV path (overrides config)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "heatkern: heat semigroup kernels of elliptic operators on S1/T2"};
    app.require_subcommand(1);

    const std::vector<std::string> names = {
        "kernel", "verify", "parametrix", "subordinator", "bounds",
        "scan-angle"};
    const std::vector<std::string> descs = {
        "evaluate a kernel grid to CSV",
        "run an acceptance campaign or a cross-route comparison",
        "resolvent parametrix residual / remainder tables",
        "subordinator density tables and Laplace-transform residuals",
        "empirical kernel bound scans",
        "complex-time sector growth scan"};

    std::vector<SubArgs> args(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        add_common(app.add_subcommand(names[i], descs[i]), args[i]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11 returns 0 for --help; anything else is a usage error
        return code == 0 ? 0 : 2;
    }

    std::string chosen;
    SubArgs* a = nullptr;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (app.got_subcommand(names[i])) {
            chosen = names[i];
            a = &args[i];
        }
    if (a == nullptr) {
        std::cerr << "error: no subcommand\n";
        return 2;
    }

    try {
        heatkern::RunConfig cfg = heatkern::load_config(a->config_path);
        if (a->threads > 0) cfg.threads = a->threads;
        if (a->tol > 0.0) cfg.tol = a->tol;
        if (a->kmax >= 0) cfg.kmax = a->kmax;
        if (!a->out.empty()) cfg.out = a->out;
        return heatkern::run_subcommand(chosen, cfg);
    } catch (const heatkern::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
