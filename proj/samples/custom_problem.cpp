// Defining a problem of your own: maximize a concave bowl under a linear constraint.

#include <cstdio>
#include <span>

#include "baswpt/core_search.hpp"
#include "baswpt/problem.hpp"

int main()
{
    using namespace baswpt;

    ConstrainedProblem problem{
        "bowl",
        SearchSpace({VariableSpec::continuous(-4.0, 4.0), VariableSpec::continuous(-4.0, 4.0)}),
        [](std::span<const double> x) { return 10.0 - (x[0] - 1.0) * (x[0] - 1.0) - (x[1] + 2.0) * (x[1] + 2.0); },
        // x + y <= -1.5 cuts off the unconstrained peak at (1, -2)
        {[](std::span<const double> x) { return x[0] + x[1] + 1.5; }},
        Sense::maximize,
    };

    RunConfig config;
    config.max_iterations = 300;
    config.seed = 7;
    const RunRecord record = run_bas(problem, config);

    std::printf("best f = %.6f at (%.4f, %.4f), g = %.3g, feasible = %s\n", record.best_objective,
                record.best_physical[0], record.best_physical[1], record.report.values[0],
                record.feasible() ? "yes" : "no");
    return record.feasible() ? 0 : 1;
}
