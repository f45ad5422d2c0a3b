#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "baswpt/constraint_penalty.hpp"
#include "baswpt/errors.hpp"
#include "baswpt/variable_space.hpp"

namespace baswpt
{

enum class Sense
{
    minimize,
    maximize
};

inline const char* to_string(Sense sense) noexcept { return sense == Sense::minimize ? "minimize" : "maximize"; }

/// Objective plus one-sided inequality constraints over a bounded search space.
struct ConstrainedProblem
{
    std::string name;
    SearchSpace space;
    ScalarFunction objective;
    ConstraintSet constraints;
    Sense sense = Sense::minimize;

    std::size_t dimension() const noexcept { return space.dimension(); }
};

/// Everything computed for one normalized point.
struct Evaluation
{
    std::vector<double> physical;
    double objective = 0.0;
    std::vector<double> constraints;
    double fitness = 0.0;
};

/// The denormalize -> objective/constraints -> penalty pipeline. Fitness is always minimized;
/// maximization problems are negated before the penalty is added.
class Evaluator
{
public:
    Evaluator(const ConstrainedProblem& problem, double lambda) : problem_(&problem), lambda_(lambda) {}

    Evaluation evaluate(std::span<const double> u) const
    {
        Evaluation e;
        e.physical = denormalize(problem_->space, u);
        e.objective = problem_->objective(e.physical);
        if (!std::isfinite(e.objective)) {
            throw EvaluationError("objective is not finite", e.physical);
        }
        e.constraints = evaluate_constraints(problem_->constraints, e.physical);
        const double f = problem_->sense == Sense::minimize ? e.objective : -e.objective;
        e.fitness = penalized_fitness(f, e.constraints, lambda_);
        if (!std::isfinite(e.fitness)) {
            throw EvaluationError("penalized fitness is not finite", e.physical);
        }
        return e;
    }

    double fitness(std::span<const double> u) const { return evaluate(u).fitness; }

    const ConstrainedProblem& problem() const noexcept { return *problem_; }

private:
    const ConstrainedProblem* problem_;
    double lambda_;
};

} // namespace baswpt
