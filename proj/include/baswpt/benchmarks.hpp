#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "baswpt/constraint_penalty.hpp"
#include "baswpt/errors.hpp"
#include "baswpt/problem.hpp"
#include "baswpt/variable_space.hpp"

namespace baswpt
{

namespace pressure_vessel_terms
{

// x = (shell thickness, head thickness, inner radius, cylinder length)
inline double cost(std::span<const double> x)
{
    return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] + 3.1661 * x[0] * x[0] * x[3] +
           19.84 * x[0] * x[0] * x[2];
}

inline double shell_thickness(std::span<const double> x) { return -x[0] + 0.0193 * x[2]; }
inline double head_thickness(std::span<const double> x) { return -x[1] + 0.00954 * x[2]; }

inline double volume(std::span<const double> x)
{
    constexpr double pi = std::numbers::pi;
    return -pi * x[2] * x[2] * x[3] - (4.0 / 3.0) * pi * x[2] * x[2] * x[2] + 1296000.0;
}

inline double length(std::span<const double> x) { return x[3] - 240.0; }

} // namespace pressure_vessel_terms

/// Four-variable vessel cost; thicknesses on multiples of 0.0625, radius and length continuous.
inline ConstrainedProblem pressure_vessel()
{
    namespace pv = pressure_vessel_terms;
    SearchSpace space({
        VariableSpec::grid_multiples(1, 99, 0.0625),
        VariableSpec::grid_multiples(1, 99, 0.0625),
        VariableSpec::continuous(10.0, 200.0),
        VariableSpec::continuous(10.0, 200.0),
    });
    return ConstrainedProblem{
        "pressure-vessel",
        std::move(space),
        pv::cost,
        {pv::shell_thickness, pv::head_thickness, pv::volume, pv::length},
        Sense::minimize,
    };
}

namespace himmelblau_terms
{

inline double objective(std::span<const double> x)
{
    return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.29329 * x[0] - 40792.141;
}

inline double g1(std::span<const double> x)
{
    return 85.334407 + 0.0056858 * x[1] * x[4] + 0.00026 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
}

inline double g2(std::span<const double> x)
{
    return 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
}

inline double g3(std::span<const double> x)
{
    return 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
}

inline constexpr double g1_lower = 0.0, g1_upper = 92.0;
inline constexpr double g2_lower = 90.0, g2_upper = 110.0;
inline constexpr double g3_lower = 20.0, g3_upper = 25.0;

} // namespace himmelblau_terms

/// Five variables, three two-sided functional constraints split into six one-sided ones,
/// ordered (g1 low, g1 high, g2 low, g2 high, g3 low, g3 high).
inline ConstrainedProblem himmelblau()
{
    namespace hb = himmelblau_terms;
    SearchSpace space({
        VariableSpec::continuous(78.0, 102.0),
        VariableSpec::continuous(33.0, 45.0),
        VariableSpec::continuous(27.0, 45.0),
        VariableSpec::continuous(27.0, 45.0),
        VariableSpec::continuous(27.0, 45.0),
    });
    ConstraintSet constraints;
    for (auto&& [lo, hi, g] : {std::tuple{hb::g1_lower, hb::g1_upper, &hb::g1},
                               std::tuple{hb::g2_lower, hb::g2_upper, &hb::g2},
                               std::tuple{hb::g3_lower, hb::g3_upper, &hb::g3}}) {
        auto pair = split_two_sided(lo, hi, g);
        constraints.push_back(std::move(pair[0]));
        constraints.push_back(std::move(pair[1]));
    }
    return ConstrainedProblem{"himmelblau", std::move(space), hb::objective, std::move(constraints),
                              Sense::minimize};
}

/// Sum of squares on [-5, 5]^dim, unconstrained.
inline ConstrainedProblem sphere(std::size_t dim)
{
    if (dim == 0) {
        throw InvalidDimension("sphere needs dimension >= 1");
    }
    std::vector<VariableSpec> vars(dim, VariableSpec::continuous(-5.0, 5.0));
    return ConstrainedProblem{
        "sphere",
        SearchSpace(std::move(vars)),
        [](std::span<const double> x) {
            double s = 0.0;
            for (double xi : x) {
                s += xi * xi;
            }
            return s;
        },
        {},
        Sense::minimize,
    };
}

inline std::vector<std::string> problem_names() { return {"pressure-vessel", "himmelblau", "sphere"}; }

/// Registry lookup. `dim` only applies to problems of free dimension (sphere).
inline ConstrainedProblem make_problem(const std::string& name, std::size_t dim = 4)
{
    if (name == "pressure-vessel") {
        return pressure_vessel();
    }
    if (name == "himmelblau") {
        return himmelblau();
    }
    if (name == "sphere") {
        return sphere(dim);
    }
    throw UnknownProblem(name, problem_names());
}

} // namespace baswpt
