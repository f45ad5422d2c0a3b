#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "baswpt/errors.hpp"

namespace baswpt
{

/// A real-valued function of a physical point.
using ScalarFunction = std::function<double(std::span<const double>)>;

/// One-sided constraints, each read as g(x) <= 0.
using ConstraintSet = std::vector<ScalarFunction>;

/// 1 when the constraint is violated (g > 0). The boundary g = 0 is feasible.
constexpr int violation_indicator(double g_value) noexcept { return g_value > 0.0 ? 1 : 0; }

/// F = f + lambda * sum_j h(g_j) * g_j. The penalty is linear in the raw violation; when no
/// constraint is violated F equals f exactly.
inline double penalized_fitness(double f, std::span<const double> g_values, double lambda)
{
    double violation = 0.0;
    bool any = false;
    for (double g : g_values) {
        if (violation_indicator(g) == 1) {
            violation += g;
            any = true;
        }
    }
    return any ? f + lambda * violation : f;
}

/// lower <= g(x) <= upper as the pair {lower - g(x) <= 0, g(x) - upper <= 0}.
inline std::array<ScalarFunction, 2> split_two_sided(double lower, double upper, ScalarFunction g)
{
    if (!(lower < upper)) {
        throw InvalidRange("two-sided constraint needs lower < upper");
    }
    auto shared = std::make_shared<ScalarFunction>(std::move(g));
    return {
        ScalarFunction([lower, shared](std::span<const double> x) { return lower - (*shared)(x); }),
        ScalarFunction([upper, shared](std::span<const double> x) { return (*shared)(x) - upper; }),
    };
}

struct FeasibilityReport
{
    std::vector<double> values;
    std::vector<bool> violated;
    bool feasible = true;

    bool operator==(const FeasibilityReport&) const = default;
};

inline FeasibilityReport make_feasibility_report(std::vector<double> values)
{
    FeasibilityReport report;
    report.violated.reserve(values.size());
    for (double g : values) {
        const bool v = violation_indicator(g) == 1;
        report.violated.push_back(v);
        report.feasible = report.feasible && !v;
    }
    report.values = std::move(values);
    return report;
}

/// Evaluate every constraint at a physical point.
inline std::vector<double> evaluate_constraints(const ConstraintSet& constraints, std::span<const double> x)
{
    std::vector<double> values;
    values.reserve(constraints.size());
    for (std::size_t j = 0; j < constraints.size(); ++j) {
        const double g = constraints[j](x);
        if (!std::isfinite(g)) {
            throw EvaluationError("constraint " + std::to_string(j) + " is not finite",
                                  std::vector<double>(x.begin(), x.end()));
        }
        values.push_back(g);
    }
    return values;
}

inline FeasibilityReport feasibility_report(const ConstraintSet& constraints, std::span<const double> x)
{
    return make_feasibility_report(evaluate_constraints(constraints, x));
}

} // namespace baswpt
