// bas-wpt: seeded batch runs of the beetle antennae optimizer on the built-in benchmarks.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "baswpt/benchmarks.hpp"
#include "baswpt/errors.hpp"
#include "baswpt/runner.hpp"
#include "baswpt/table_check.hpp"

namespace
{

enum ExitCode : int
{
    success = 0,
    no_feasible = 1,
    config_error = 2,
    evaluation_error = 3,
};

int run_command(const baswpt::BatchConfig& config, std::size_t workers, const std::optional<std::string>& output)
{
    const auto results = baswpt::run_restarts(config, workers);
    const auto summary = baswpt::summarize(config, results);

    const std::string report = baswpt::emit_report(summary, config.format);
    if (output) {
        baswpt::write_text(*output, report);
    } else {
        std::cout << report;
    }
    if (config.trace_path) {
        baswpt::write_text(*config.trace_path, baswpt::emit_trace(baswpt::best_record(summary, results)));
    }
    return summary.any_feasible() ? success : no_feasible;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Beetle antennae search without parameter tuning: benchmark runner"};
    app.require_subcommand(1);

    baswpt::BatchConfig config;
    std::size_t workers = 1;
    std::optional<std::string> output;
    std::optional<std::string> trace;

    // Run options live on the top-level app so that a flat config file can fill them; the run
    // subcommand falls through to them.
    app.set_config("--config", "", "Key-value config file for run options; command-line flags take precedence");
    auto* run = app.add_subcommand("run", "Run seeded restarts on a benchmark problem and print a report");
    run->fallthrough();
    const std::string group = "Run options";
    app.add_option("--problem", config.problem, "Problem name (see list-problems)")->group(group);
    app.add_option("--dim", config.dimension, "Dimension for problems of free dimension")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->group(group);
    app.add_option("--iters", config.run.max_iterations, "Iterations per restart")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->group(group);
    app.add_option("--restarts", config.restarts, "Number of independent restarts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->group(group);
    app.add_option("--seed", config.base_seed, "Base seed; restart r uses seed + r")->capture_default_str()->group(group);
    app.add_option("--c1", config.run.c1, "Step decay coefficient in [0,1)")->capture_default_str()->group(group);
    app.add_option("--c2", config.run.c2, "Step to antenna distance ratio")->capture_default_str()->group(group);
    app.add_option("--delta-init", config.run.delta_init, "Initial step size (normalized units)")
        ->capture_default_str()
        ->group(group);
    app.add_option("--delta-add", config.run.delta_add, "Additive term of the step recurrence")
        ->capture_default_str()
        ->group(group);
    app.add_flag("--paper-exact-schedule", config.run.paper_exact_schedule,
                 "Re-add the initial step every iteration (delta-add = delta-init)")
        ->group(group);
    app.add_option("--lambda", config.run.lambda, "Penalty weight")->capture_default_str()->group(group);
    app.add_option("--format", config.format, "Report format: json or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, baswpt::ReportFormat>{{"json", baswpt::ReportFormat::json},
                                                        {"csv", baswpt::ReportFormat::csv}},
            CLI::ignore_case))
        ->group(group);
    app.add_option("--trace", trace, "Write the best restart's per-iteration trace as CSV")->group(group);
    app.add_option("--output", output, "Write the report to a file instead of stdout")->group(group);
    app.add_option("--workers", workers, "Worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber)
        ->group(group);

    auto* verify = app.add_subcommand("verify-tables", "Re-evaluate the published reference solutions");
    auto* list = app.add_subcommand("list-problems", "List the registered benchmark problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return config_error;
    }

    if (*list) {
        for (const auto& name : baswpt::problem_names()) {
            std::cout << name << '\n';
        }
        return success;
    }

    if (*verify) {
        const auto report = baswpt::verify_tables();
        std::cout << baswpt::format_table_check(report);
        return report.passed() ? success : no_feasible;
    }

    if (config.problem.empty()) {
        std::cerr << "config error: --problem is required\n";
        return config_error;
    }
    config.trace_path = trace;
    try {
        return run_command(config, workers, output);
    } catch (const baswpt::BatchEvaluationError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return evaluation_error;
    } catch (const baswpt::EvaluationError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return evaluation_error;
    } catch (const baswpt::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    }
}
