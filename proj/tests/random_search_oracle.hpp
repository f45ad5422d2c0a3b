#pragma once

// Pure uniform random search over the physical box. Shares nothing with the optimizer beyond
// the problem's objective and bounds, so it serves as an independent baseline.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "baswpt/problem.hpp"

namespace oracle
{

inline double random_search_best(const baswpt::ConstrainedProblem& problem, std::size_t evaluations,
                                 std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> x(problem.dimension());
    for (std::size_t e = 0; e < evaluations; ++e) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const auto& var = problem.space[i];
            std::uniform_real_distribution<double> u(var.lower(), var.upper());
            x[i] = u(rng);
        }
        best = std::min(best, problem.objective(x));
    }
    return best;
}

inline double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace oracle
