// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any gating criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "baswpt/benchmarks.hpp"
#include "baswpt/constraint_penalty.hpp"
#include "baswpt/core_search.hpp"
#include "baswpt/runner.hpp"
#include "baswpt/table_check.hpp"
#include "random_search_oracle.hpp"

using namespace baswpt;

namespace
{

struct Outcome
{
    bool passed;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

BatchConfig batch(const std::string& problem, std::size_t iters, std::size_t restarts)
{
    BatchConfig cfg;
    cfg.problem = problem;
    cfg.run.max_iterations = iters;
    cfg.restarts = restarts;
    cfg.base_seed = 0;
    return cfg;
}

// 1. Pressure vessel: 30 restarts x 150 iterations, defaults, base seed 0.
Outcome pressure_vessel_criterion()
{
    constexpr double f_limit = 6100.0;
    constexpr double time_limit = 5.0;
    const auto start = std::chrono::steady_clock::now();
    const auto s = run_batch(batch("pressure-vessel", 150, 30));
    const double elapsed = seconds_since(start);

    const auto problem = pressure_vessel();
    bool on_grid = true;
    for (std::size_t i : {0u, 1u}) {
        on_grid = on_grid && snap_to_grid(problem.space[i], s.best.x[i]) == s.best.x[i];
    }
    bool constraints_ok = s.best.report.values.size() == 4;
    for (double g : s.best.report.values) {
        constraints_ok = constraints_ok && g <= 0.0;
    }
    const bool ok = s.any_feasible() && s.best.f <= f_limit && constraints_ok && on_grid && elapsed < time_limit;
    return {ok, fmt("best f = %.4f (limit %.0f), ", s.best.f, f_limit) +
                    (constraints_ok ? "g1..g4 <= 0, " : "constraint violated, ") +
                    (on_grid ? "x1,x2 on grid, " : "x1,x2 off grid, ") + fmt("%.3f s", elapsed)};
}

// 2. Himmelblau: 30 restarts x 200 iterations gating; 30 x 2000 stretch is logged only.
Outcome himmelblau_criterion()
{
    constexpr double f_limit = -30600.0;
    constexpr double stretch_limit = -30950.0;
    constexpr double time_limit = 5.0;
    const auto start = std::chrono::steady_clock::now();
    const auto s = run_batch(batch("himmelblau", 200, 30));
    const double elapsed = seconds_since(start);
    const bool ok = s.any_feasible() && s.best.report.feasible && s.best.f <= f_limit && elapsed < time_limit;

    const auto stretch = run_batch(batch("himmelblau", 2000, 30), 4);
    const bool stretch_ok = stretch.any_feasible() && stretch.best.f <= stretch_limit;
    return {ok, fmt("best f = %.4f (limit %.0f), %.3f s; ", s.best.f, f_limit, elapsed) +
                    fmt("stretch 30x2000 best f = %.4f (target %.0f, ", stretch.best.f, stretch_limit) +
                    (stretch_ok ? "met, non-gating)" : "missed, non-gating)")};
}

// 3. Reference tables: every checked row reproduces f within 0.5% / 0.1%.
Outcome tables_criterion()
{
    constexpr double time_limit = 1.0;
    const auto start = std::chrono::steady_clock::now();
    const auto report = verify_tables();
    const double elapsed = seconds_since(start);
    std::size_t f_cells = 0;
    std::size_t other_failures = 0;
    std::string failures;
    for (const auto& c : report.cells) {
        if (c.column != "f*") {
            other_failures += c.passed ? 0 : 1;
            continue;
        }
        ++f_cells;
        if (!c.passed) {
            failures += " " + c.table + "/" + c.row +
                        fmt(" (printed %.4f, computed %.4f, rel err %.3g%%)", c.printed, c.computed,
                            100.0 * std::abs(c.computed - c.printed) / std::abs(c.printed));
        }
    }
    const bool ok = failures.empty() && elapsed < time_limit;
    return {ok, fmt("%.0f f cells checked, %.0f other cell failures, %.4f s", static_cast<double>(f_cells),
                    static_cast<double>(other_failures), elapsed) +
                    (failures.empty() ? "" : "; f failures:" + failures)};
}

// 4. Property suite.
Outcome properties_criterion()
{
    std::vector<std::string> broken;
    auto check = [&broken](bool ok, const std::string& name) {
        if (!ok) {
            broken.push_back(name);
        }
    };

    {
        Rng rng(1);
        bool ok = true;
        for (std::size_t dim = 1; dim <= 16 && ok; ++dim) {
            for (int i = 0; i < 2000; ++i) {
                const auto b = sample_unit_direction(dim, rng);
                double sq = 0.0;
                for (double c : b.components()) {
                    sq += c * c;
                }
                ok = ok && std::abs(std::sqrt(sq) - 1.0) <= 1e-12;
            }
        }
        check(ok, "unit-norm directions");
    }
    {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        bool ok = true;
        for (const auto& p : {pressure_vessel(), himmelblau(), sphere(6)}) {
            for (int i = 0; i < 2000; ++i) {
                std::vector<double> u(p.dimension());
                for (auto& c : u) {
                    c = u01(rng);
                }
                const auto x = denormalize(p.space, u);
                const auto back = normalize(p.space, x);
                for (std::size_t k = 0; k < u.size(); ++k) {
                    if (!p.space[k].is_grid()) {
                        ok = ok && std::abs(back[k] - u[k]) <= 1e-12;
                    }
                }
            }
        }
        check(ok, "normalize/denormalize round trip");
    }
    {
        std::mt19937_64 rng(3);
        bool ok = true;
        for (const auto& p : {pressure_vessel(), himmelblau()}) {
            int feasible_seen = 0;
            for (int i = 0; i < 20000; ++i) {
                const auto x = denormalize(p.space, random_unit_point(p.space, rng));
                const auto r = feasibility_report(p.constraints, x);
                if (!r.feasible) {
                    continue;
                }
                ++feasible_seen;
                const double f = p.objective(x);
                for (double lambda : {1e-6, 1.0, 1e10, 1e300}) {
                    ok = ok && penalized_fitness(f, r.values, lambda) == f;
                }
            }
            ok = ok && feasible_seen > 0;
        }
        check(ok, "penalized fitness equals objective on feasible points");
    }
    {
        bool monotone = true;
        bool repeatable = true;
        for (const auto& p : {pressure_vessel(), himmelblau(), sphere(4)}) {
            for (std::uint64_t seed = 0; seed < 30; ++seed) {
                RunConfig c;
                c.max_iterations = 200;
                c.seed = seed;
                const auto rec = run_bas(p, c);
                double prev = std::numeric_limits<double>::infinity();
                for (const auto& t : rec.trace) {
                    monotone = monotone && t.best_fitness <= prev;
                    prev = t.best_fitness;
                }
                repeatable = repeatable && rec == run_bas(p, c);
            }
        }
        check(monotone, "best-so-far monotone");
        check(repeatable, "bit-identical repeated runs");
    }
    {
        bool ok = true;
        for (const char* name : {"pressure-vessel", "himmelblau", "sphere"}) {
            const auto cfg = batch(name, 150, 16);
            const auto one = run_batch(cfg, 1);
            for (std::size_t w : {2u, 4u, 16u}) {
                ok = ok && same_results(one, run_batch(cfg, w));
            }
        }
        check(ok, "batch independent of worker count");
    }
    {
        bool ok = true;
        auto s = RunConfig{}.schedule();
        for (int k = 0; k < 500; ++k) {
            s = advance_schedule(s);
            ok = ok && s.d == s.delta / s.c2;
        }
        auto geo = StepSchedule::start(0.9, 5.0, 1.0, 0.0);
        for (int k = 1; k <= 200; ++k) {
            geo = advance_schedule(geo);
            ok = ok && std::abs(geo.delta - std::pow(0.9, k)) <= 1e-12 * std::pow(0.9, k) + 1e-300;
        }
        RunConfig exact;
        exact.c1 = 0.5;
        exact.delta_init = 1.0;
        exact.paper_exact_schedule = true;
        auto e = exact.schedule();
        for (int k = 0; k < 200; ++k) {
            e = advance_schedule(e);
        }
        ok = ok && std::abs(e.delta - exact.delta_init / (1.0 - exact.c1)) <= 1e-9;
        check(ok, "schedule identities");
    }

    std::string detail = broken.empty() ? "all 8 property groups hold" : "broken:";
    for (const auto& b : broken) {
        detail += " [" + b + "]";
    }
    return {broken.empty(), detail};
}

// 5. sphere(4), 300 evaluations: BAS median best over 20 seeds at least 10x below random search.
Outcome baseline_criterion()
{
    const auto problem = sphere(4);
    std::vector<double> bas, rs;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RunConfig c;
        c.max_iterations = 100;
        c.seed = seed;
        bas.push_back(run_bas(problem, c).best_objective);
        rs.push_back(oracle::random_search_best(problem, 300, seed));
    }
    const double bas_median = oracle::median(bas);
    const double rs_median = oracle::median(rs);
    return {bas_median * 10.0 <= rs_median,
            fmt("BAS median %.3g, random search median %.3g, ratio %.1fx (need >= 10x)", bas_median, rs_median,
                rs_median / bas_median)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 pressure vessel 30x150 f <= 6100", pressure_vessel_criterion},
        {"2 himmelblau 30x200 f <= -30600", himmelblau_criterion},
        {"3 reference tables reproduce f", tables_criterion},
        {"4 property suite", properties_criterion},
        {"5 sphere beats random search 10x", baseline_criterion},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o{false, ""};
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        failed += o.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
