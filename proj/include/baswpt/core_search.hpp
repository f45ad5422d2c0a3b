#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "baswpt/constraint_penalty.hpp"
#include "baswpt/errors.hpp"
#include "baswpt/problem.hpp"
#include "baswpt/variable_space.hpp"

namespace baswpt
{

/// Generator used for every seeded run.
using Rng = std::mt19937_64;

class UnitVector
{
public:
    /// Scale a nonzero vector to unit Euclidean norm.
    static UnitVector normalized(std::vector<double> v)
    {
        if (v.empty()) {
            throw InvalidDimension("unit vector needs dimension >= 1");
        }
        double sq = 0.0;
        for (double c : v) {
            sq += c * c;
        }
        const double norm = std::sqrt(sq);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw InvalidRange("cannot normalize a zero or non-finite vector");
        }
        for (double& c : v) {
            c /= norm;
        }
        return UnitVector(std::move(v));
    }

    std::span<const double> components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const { return components_[i]; }

    bool operator==(const UnitVector&) const = default;

private:
    explicit UnitVector(std::vector<double> c) : components_(std::move(c)) {}

    std::vector<double> components_;
};

/// Direction uniform on the unit sphere: i.i.d. standard normals divided by their norm.
template <class URBG>
UnitVector sample_unit_direction(std::size_t dim, URBG& rng)
{
    if (dim == 0) {
        throw InvalidDimension("direction needs dimension >= 1");
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> v(dim);
    for (;;) {
        double sq = 0.0;
        for (auto& c : v) {
            c = normal(rng);
            sq += c * c;
        }
        if (sq > 0.0) {
            return UnitVector::normalized(std::move(v));
        }
    }
}

struct ProbeResult
{
    double right;
    double left;
};

/// Fitness at x + d*b (right antenna) and x - d*b (left antenna). Probe points are passed to
/// `evaluate` unclamped; the evaluation pipeline is responsible for clamping.
template <class Evaluate>
ProbeResult probe_antennae(std::span<const double> position, const UnitVector& b, double d, Evaluate&& evaluate)
{
    if (!(d > 0.0)) {
        throw InvalidRange("antenna distance must be positive");
    }
    if (position.size() != b.size()) {
        throw InvalidDimension("position and direction lengths differ");
    }
    std::vector<double> right(position.size());
    std::vector<double> left(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) {
        right[i] = position[i] + d * b[i];
        left[i] = position[i] - d * b[i];
    }
    const double f_right = evaluate(std::span<const double>(right));
    if (!std::isfinite(f_right)) {
        throw EvaluationError("right antenna fitness is not finite", right);
    }
    const double f_left = evaluate(std::span<const double>(left));
    if (!std::isfinite(f_left)) {
        throw EvaluationError("left antenna fitness is not finite", left);
    }
    return {f_right, f_left};
}

constexpr double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

/// Move delta along b toward the better antenna, then clamp to the unit cube. Ties do not move.
inline std::vector<double> detect_step(std::span<const double> position, const UnitVector& b, double delta,
                                       double f_right, double f_left, Sense sense)
{
    if (!(delta > 0.0)) {
        throw InvalidRange("step size must be positive");
    }
    if (position.size() != b.size()) {
        throw InvalidDimension("position and direction lengths differ");
    }
    const double s = sign(f_right - f_left);
    const double direction = sense == Sense::minimize ? -s : s;
    std::vector<double> next(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) {
        next[i] = std::clamp(position[i] + direction * delta * b[i], 0.0, 1.0);
    }
    return next;
}

/// Coupled step size / antenna distance: delta' = c1*delta + delta_add, d' = delta'/c2.
/// Setting delta_add = delta_init gives the recurrence that re-adds the initial step every iteration.
struct StepSchedule
{
    double delta = 1.0;
    double d = 0.2;
    double c1 = 0.95;
    double c2 = 5.0;
    double delta_add = 0.001;
    double delta_init = 1.0;

    static StepSchedule start(double c1, double c2, double delta_init, double delta_add)
    {
        if (!(c1 >= 0.0 && c1 < 1.0)) {
            throw InvalidRange("c1 must lie in [0, 1)");
        }
        if (!(c2 > 0.0) || !std::isfinite(c2)) {
            throw InvalidRange("c2 must be positive");
        }
        if (!(delta_init > 0.0) || !std::isfinite(delta_init)) {
            throw InvalidRange("initial step must be positive");
        }
        if (!(delta_add >= 0.0) || !std::isfinite(delta_add)) {
            throw InvalidRange("additive step term must be non-negative");
        }
        return StepSchedule{delta_init, delta_init / c2, c1, c2, delta_add, delta_init};
    }

    bool operator==(const StepSchedule&) const = default;
};

inline StepSchedule advance_schedule(StepSchedule s) noexcept
{
    s.delta = s.c1 * s.delta + s.delta_add;
    s.d = s.delta / s.c2;
    return s;
}

struct RunConfig
{
    std::size_t max_iterations = 150;
    double c1 = 0.95;
    double c2 = 5.0;
    double delta_init = 1.0;
    double delta_add = 0.001;
    /// Re-add delta_init every iteration instead of delta_add.
    bool paper_exact_schedule = false;
    double lambda = 1e10;
    std::uint64_t seed = 0;

    double effective_delta_add() const noexcept { return paper_exact_schedule ? delta_init : delta_add; }

    StepSchedule schedule() const { return StepSchedule::start(c1, c2, delta_init, effective_delta_add()); }

    void validate() const
    {
        if (max_iterations < 1) {
            throw InvalidRange("max_iterations must be >= 1");
        }
        if (!(lambda > 0.0) || !std::isfinite(lambda)) {
            throw InvalidRange("lambda must be positive and finite");
        }
        (void)schedule();
    }

    bool operator==(const RunConfig&) const = default;
};

struct BeetleState
{
    std::vector<double> position;
    std::vector<double> best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::size_t iteration = 0;
};

struct TraceEntry
{
    std::size_t iteration;
    double delta;
    double d;
    double fitness;
    double best_fitness;

    bool operator==(const TraceEntry&) const = default;
};

struct RunRecord
{
    std::uint64_t seed = 0;
    RunConfig config;
    std::vector<double> best_normalized;
    std::vector<double> best_physical;
    /// Penalized fitness at the best point (minimization sense).
    double best_fitness = 0.0;
    /// Raw objective at the best point, in the problem's own sense.
    double best_objective = 0.0;
    FeasibilityReport report;
    std::vector<TraceEntry> trace;

    bool feasible() const noexcept { return report.feasible; }

    bool operator==(const RunRecord&) const = default;
};

/// One beetle, max_iterations rounds of probe / step / evaluate / keep-best / shrink.
/// Each iteration costs three evaluations (two antennae and the new position). The beetle keeps
/// moving from its own position; the best point is only recorded, never returned to.
template <class URBG>
RunRecord run_bas(const ConstrainedProblem& problem, const RunConfig& config, URBG& rng)
{
    config.validate();
    const std::size_t dim = problem.dimension();
    const Evaluator evaluator(problem, config.lambda);
    const auto fitness = [&evaluator](std::span<const double> u) { return evaluator.fitness(u); };

    StepSchedule schedule = config.schedule();
    BeetleState state;
    state.position = random_unit_point(problem.space, rng);
    Evaluation best;

    RunRecord record;
    record.seed = config.seed;
    record.config = config;
    record.trace.reserve(config.max_iterations);

    for (std::size_t t = 1; t <= config.max_iterations; ++t) {
        const UnitVector b = sample_unit_direction(dim, rng);
        const ProbeResult probe = probe_antennae(state.position, b, schedule.d, fitness);
        state.position = detect_step(state.position, b, schedule.delta, probe.right, probe.left, Sense::minimize);
        state.iteration = t;

        Evaluation current = evaluator.evaluate(state.position);
        const double current_fitness = current.fitness;
        if (current_fitness < state.best_fitness) {
            state.best_fitness = current_fitness;
            state.best_position = state.position;
            best = std::move(current);
        }
        record.trace.push_back({t, schedule.delta, schedule.d, current_fitness, state.best_fitness});
        schedule = advance_schedule(schedule);
    }

    record.best_normalized = state.best_position;
    record.best_physical = best.physical;
    record.best_fitness = state.best_fitness;
    record.best_objective = best.objective;
    record.report = make_feasibility_report(std::move(best.constraints));
    return record;
}

/// Seeded run: the generator is created from config.seed, so the record is a pure function of
/// (problem, config).
inline RunRecord run_bas(const ConstrainedProblem& problem, const RunConfig& config)
{
    Rng rng(config.seed);
    return run_bas(problem, config, rng);
}

} // namespace baswpt
