#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "baswpt/benchmarks.hpp"
#include "baswpt/constraint_penalty.hpp"
#include "baswpt/core_search.hpp"
#include "baswpt/errors.hpp"
#include "baswpt/problem.hpp"

namespace baswpt
{

enum class ReportFormat
{
    json,
    csv
};

/// Restart r of a batch runs with seed base_seed + r.
struct BatchConfig
{
    std::string problem = "pressure-vessel";
    /// Only used by problems of free dimension.
    std::size_t dimension = 4;
    /// Schedule, penalty and iteration budget shared by every restart. Its seed is ignored.
    RunConfig run;
    std::size_t restarts = 30;
    std::uint64_t base_seed = 0;
    ReportFormat format = ReportFormat::json;
    std::optional<std::string> trace_path;

    std::uint64_t seed_for(std::size_t r) const noexcept { return base_seed + r; }

    void validate() const
    {
        if (restarts < 1) {
            throw InvalidRange("restarts must be >= 1");
        }
        if (dimension < 1) {
            throw InvalidDimension("dimension must be >= 1");
        }
        run.validate();
    }
};

/// An evaluation failure inside one restart of a batch.
class BatchEvaluationError : public std::runtime_error
{
public:
    BatchEvaluationError(std::uint64_t seed, const EvaluationError& cause)
        : std::runtime_error("run with seed " + std::to_string(seed) + ": " + cause.what()), seed_(seed),
          point_(cause.point())
    {
    }

    std::uint64_t seed() const noexcept { return seed_; }
    const std::vector<double>& point() const noexcept { return point_; }

private:
    std::uint64_t seed_;
    std::vector<double> point_;
};

struct RunOutcome
{
    std::size_t run = 0;
    std::uint64_t seed = 0;
    bool feasible = false;
    double best_f = 0.0;
    double best_fitness = 0.0;
    double wall_seconds = 0.0;

    bool operator==(const RunOutcome&) const = default;
};

/// Order statistics over feasible runs, in the problem's own sense ("best" is the largest value
/// for maximization problems).
struct Statistics
{
    std::size_t count = 0;
    double best = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;
    double worst = 0.0;

    bool operator==(const Statistics&) const = default;
};

struct BestSolution
{
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::vector<double> x;
    double f = 0.0;
    double fitness = 0.0;
    FeasibilityReport report;

    bool operator==(const BestSolution&) const = default;
};

struct BatchSummary
{
    std::string problem;
    std::size_t dimension = 0;
    Sense sense = Sense::minimize;
    RunConfig run;
    std::size_t restarts = 0;
    std::uint64_t base_seed = 0;

    std::vector<RunOutcome> runs;
    std::size_t feasible_runs = 0;
    std::size_t infeasible_runs = 0;
    std::optional<Statistics> statistics;
    BestSolution best;

    bool any_feasible() const noexcept { return feasible_runs > 0; }

    bool operator==(const BatchSummary&) const = default;
};

/// Equality that ignores wall-clock timings.
inline bool same_results(const BatchSummary& a, BatchSummary b)
{
    if (a.runs.size() != b.runs.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
        b.runs[i].wall_seconds = a.runs[i].wall_seconds;
    }
    return a == b;
}

struct TimedRecord
{
    RunRecord record;
    double wall_seconds = 0.0;
};

/// Execute every restart, spread over `workers` threads. Results are ordered by restart index
/// regardless of completion order, so the output does not depend on the worker count.
inline std::vector<TimedRecord> run_restarts(const BatchConfig& config, std::size_t workers = 1)
{
    config.validate();
    const ConstrainedProblem problem = make_problem(config.problem, config.dimension);
    const std::size_t n = config.restarts;
    std::vector<TimedRecord> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (std::size_t r = next++; r < n; r = next++) {
            try {
                RunConfig rc = config.run;
                rc.seed = config.seed_for(r);
                const auto start = std::chrono::steady_clock::now();
                results[r].record = run_bas(problem, rc);
                results[r].wall_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };

    workers = std::clamp<std::size_t>(workers, 1, n);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    for (std::size_t r = 0; r < n; ++r) {
        if (!errors[r]) {
            continue;
        }
        try {
            std::rethrow_exception(errors[r]);
        } catch (const EvaluationError& e) {
            throw BatchEvaluationError(config.seed_for(r), e);
        }
    }
    return results;
}

namespace detail
{

inline Statistics compute_statistics(std::vector<double> values, Sense sense)
{
    Statistics s;
    s.count = values.size();
    std::sort(values.begin(), values.end());
    if (sense == Sense::maximize) {
        std::reverse(values.begin(), values.end());
    }
    s.best = values.front();
    s.worst = values.back();
    const std::size_t n = values.size();
    s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

} // namespace detail

/// Aggregate restart records. The best run is the best feasible objective; when no run is
/// feasible it is the lowest penalized fitness. Ties go to the lower restart index.
inline BatchSummary summarize(const BatchConfig& config, const std::vector<TimedRecord>& results)
{
    const ConstrainedProblem problem = make_problem(config.problem, config.dimension);
    BatchSummary s;
    s.problem = config.problem;
    s.dimension = problem.dimension();
    s.sense = problem.sense;
    s.run = config.run;
    s.run.seed = config.base_seed;
    s.restarts = config.restarts;
    s.base_seed = config.base_seed;

    const double orient = problem.sense == Sense::minimize ? 1.0 : -1.0;
    std::vector<double> feasible_values;
    std::optional<std::size_t> best_index;
    for (std::size_t r = 0; r < results.size(); ++r) {
        const RunRecord& rec = results[r].record;
        s.runs.push_back({r, rec.seed, rec.feasible(), rec.best_objective, rec.best_fitness, results[r].wall_seconds});
        if (rec.feasible()) {
            feasible_values.push_back(rec.best_objective);
        }
        if (!best_index) {
            best_index = r;
            continue;
        }
        const RunRecord& cur = results[*best_index].record;
        const bool better = rec.feasible() != cur.feasible()
                                ? rec.feasible()
                                : (rec.feasible() ? orient * rec.best_objective < orient * cur.best_objective
                                                  : rec.best_fitness < cur.best_fitness);
        if (better) {
            best_index = r;
        }
    }
    s.feasible_runs = feasible_values.size();
    s.infeasible_runs = results.size() - feasible_values.size();
    if (!feasible_values.empty()) {
        s.statistics = detail::compute_statistics(std::move(feasible_values), problem.sense);
    }
    if (best_index) {
        const RunRecord& rec = results[*best_index].record;
        s.best = {*best_index, rec.seed, rec.best_physical, rec.best_objective, rec.best_fitness, rec.report};
    }
    return s;
}

inline BatchSummary run_batch(const BatchConfig& config, std::size_t workers = 1)
{
    return summarize(config, run_restarts(config, workers));
}

/// The restart record behind the summary's best solution.
inline const RunRecord& best_record(const BatchSummary& summary, const std::vector<TimedRecord>& results)
{
    return results.at(summary.best.run).record;
}

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Column labels of the best-solution block: x1..xN, g1..gK, f*.
inline std::vector<std::string> solution_columns(std::size_t n, std::size_t k)
{
    std::vector<std::string> cols;
    for (std::size_t i = 1; i <= n; ++i) {
        cols.push_back("x" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= k; ++j) {
        cols.push_back("g" + std::to_string(j));
    }
    cols.push_back("f*");
    return cols;
}

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const RunConfig& c)
{
    return ordered_json{{"iters", c.max_iterations},
                        {"c1", c.c1},
                        {"c2", c.c2},
                        {"delta_init", c.delta_init},
                        {"delta_add", c.delta_add},
                        {"paper_exact_schedule", c.paper_exact_schedule},
                        {"lambda", c.lambda}};
}

inline ordered_json to_json(const BatchSummary& s)
{
    ordered_json j;
    j["problem"] = s.problem;
    j["dimension"] = s.dimension;
    j["sense"] = to_string(s.sense);
    j["config"] = to_json(s.run);
    j["config"]["restarts"] = s.restarts;
    j["config"]["base_seed"] = s.base_seed;

    ordered_json runs = ordered_json::array();
    for (const auto& r : s.runs) {
        runs.push_back({{"run", r.run},
                        {"seed", r.seed},
                        {"feasible", r.feasible},
                        {"best_f", r.best_f},
                        {"best_F", r.best_fitness},
                        {"wall_seconds", r.wall_seconds}});
    }
    j["runs"] = std::move(runs);

    ordered_json stats;
    stats["feasible_runs"] = s.feasible_runs;
    stats["infeasible_runs"] = s.infeasible_runs;
    if (s.statistics) {
        const auto& st = *s.statistics;
        stats["best"] = st.best;
        stats["mean"] = st.mean;
        stats["median"] = st.median;
        stats["std"] = st.stddev;
        stats["worst"] = st.worst;
    } else {
        for (const char* key : {"best", "mean", "median", "std", "worst"}) {
            stats[key] = nullptr;
        }
    }
    j["statistics"] = std::move(stats);

    const auto& b = s.best;
    ordered_json best;
    best["run"] = b.run;
    best["seed"] = b.seed;
    best["feasible"] = b.report.feasible;
    best["F"] = b.fitness;
    best["violated"] = b.report.violated;
    const auto cols = solution_columns(b.x.size(), b.report.values.size());
    best["columns"] = cols;
    ordered_json values = ordered_json::array();
    for (double v : b.x) {
        values.push_back(v);
    }
    for (double g : b.report.values) {
        values.push_back(g);
    }
    values.push_back(b.f);
    best["values"] = std::move(values);
    j["best_solution"] = std::move(best);
    return j;
}

inline BatchSummary summary_from_json(const ordered_json& j)
{
    BatchSummary s;
    s.problem = j.at("problem").get<std::string>();
    s.dimension = j.at("dimension").get<std::size_t>();
    s.sense = j.at("sense").get<std::string>() == "maximize" ? Sense::maximize : Sense::minimize;
    const auto& c = j.at("config");
    s.run.max_iterations = c.at("iters").get<std::size_t>();
    s.run.c1 = c.at("c1").get<double>();
    s.run.c2 = c.at("c2").get<double>();
    s.run.delta_init = c.at("delta_init").get<double>();
    s.run.delta_add = c.at("delta_add").get<double>();
    s.run.paper_exact_schedule = c.at("paper_exact_schedule").get<bool>();
    s.run.lambda = c.at("lambda").get<double>();
    s.restarts = c.at("restarts").get<std::size_t>();
    s.base_seed = c.at("base_seed").get<std::uint64_t>();
    s.run.seed = s.base_seed;

    for (const auto& r : j.at("runs")) {
        s.runs.push_back({r.at("run").get<std::size_t>(), r.at("seed").get<std::uint64_t>(),
                          r.at("feasible").get<bool>(), r.at("best_f").get<double>(), r.at("best_F").get<double>(),
                          r.at("wall_seconds").get<double>()});
    }

    const auto& st = j.at("statistics");
    s.feasible_runs = st.at("feasible_runs").get<std::size_t>();
    s.infeasible_runs = st.at("infeasible_runs").get<std::size_t>();
    if (!st.at("best").is_null()) {
        s.statistics = Statistics{s.feasible_runs,          st.at("best").get<double>(), st.at("mean").get<double>(),
                                  st.at("median").get<double>(), st.at("std").get<double>(),
                                  st.at("worst").get<double>()};
    }

    const auto& b = j.at("best_solution");
    s.best.run = b.at("run").get<std::size_t>();
    s.best.seed = b.at("seed").get<std::uint64_t>();
    s.best.fitness = b.at("F").get<double>();
    const auto values = b.at("values").get<std::vector<double>>();
    const auto violated = b.at("violated").get<std::vector<bool>>();
    const std::size_t k = violated.size();
    if (values.size() < k + 1) {
        throw std::invalid_argument("best_solution values shorter than its constraint list");
    }
    const std::size_t n = values.size() - k - 1;
    s.best.x.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
    s.best.report = make_feasibility_report(
        std::vector<double>(values.begin() + static_cast<std::ptrdiff_t>(n), values.end() - 1));
    s.best.f = values.back();
    return s;
}

inline std::string emit_csv(const BatchSummary& s)
{
    std::ostringstream os;
    os << "run,seed,feasible,best_f\n";
    for (const auto& r : s.runs) {
        os << r.run << ',' << r.seed << ',' << (r.feasible ? 1 : 0) << ',' << format_double(r.best_f) << '\n';
    }
    os << "# problem," << s.problem << '\n';
    os << "# feasible_runs," << s.feasible_runs << '\n';
    os << "# infeasible_runs," << s.infeasible_runs << '\n';
    if (s.statistics) {
        const auto& st = *s.statistics;
        os << "# best," << format_double(st.best) << '\n';
        os << "# mean," << format_double(st.mean) << '\n';
        os << "# median," << format_double(st.median) << '\n';
        os << "# std," << format_double(st.stddev) << '\n';
        os << "# worst," << format_double(st.worst) << '\n';
    }
    const auto cols = solution_columns(s.best.x.size(), s.best.report.values.size());
    os << "# best_run," << s.best.run << '\n';
    std::size_t c = 0;
    for (double v : s.best.x) {
        os << "# " << cols[c++] << ',' << format_double(v) << '\n';
    }
    for (double g : s.best.report.values) {
        os << "# " << cols[c++] << ',' << format_double(g) << '\n';
    }
    os << "# " << cols[c] << ',' << format_double(s.best.f) << '\n';
    return os.str();
}

inline std::string emit_report(const BatchSummary& summary, ReportFormat format)
{
    if (format == ReportFormat::csv) {
        return emit_csv(summary);
    }
    return to_json(summary).dump(2) + "\n";
}

inline std::string emit_trace(const RunRecord& record)
{
    std::ostringstream os;
    os << "iter,delta,d,F_current,F_best\n";
    for (const auto& t : record.trace) {
        os << t.iteration << ',' << format_double(t.delta) << ',' << format_double(t.d) << ','
           << format_double(t.fitness) << ',' << format_double(t.best_fitness) << '\n';
    }
    return os.str();
}

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

} // namespace baswpt
