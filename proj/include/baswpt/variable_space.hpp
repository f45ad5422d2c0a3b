#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "baswpt/errors.hpp"

namespace baswpt
{

enum class VariableKind
{
    continuous,
    grid
};

/// Bounds of one decision variable, optionally restricted to a finite grid of admissible values.
class VariableSpec
{
public:
    static VariableSpec continuous(double lower, double upper)
    {
        if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
            throw InvalidRange("continuous variable needs finite lower < upper");
        }
        return VariableSpec(VariableKind::continuous, lower, upper, {});
    }

    /// Grid variable whose bounds are the first and last admissible value.
    static VariableSpec grid(std::vector<double> values)
    {
        if (values.empty()) {
            throw InvalidRange("grid variable needs at least one value");
        }
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (!std::isfinite(values[k])) {
                throw InvalidRange("grid values must be finite");
            }
            if (k > 0 && !(values[k - 1] < values[k])) {
                throw InvalidRange("grid values must be strictly increasing");
            }
        }
        const double lo = values.front();
        const double hi = values.back();
        return VariableSpec(VariableKind::grid, lo, hi, std::move(values));
    }

    /// {first, first+1, ..., last} * unit
    static VariableSpec grid_multiples(int first, int last, double unit)
    {
        if (first > last || !(unit > 0.0)) {
            throw InvalidRange("grid multiples need first <= last and unit > 0");
        }
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(last - first + 1));
        for (int k = first; k <= last; ++k) {
            values.push_back(k * unit);
        }
        return grid(std::move(values));
    }

    VariableKind kind() const noexcept { return kind_; }
    bool is_grid() const noexcept { return kind_ == VariableKind::grid; }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double width() const noexcept { return upper_ - lower_; }
    const std::vector<double>& values() const noexcept { return values_; }

    bool operator==(const VariableSpec&) const = default;

private:
    VariableSpec(VariableKind kind, double lower, double upper, std::vector<double> values)
        : kind_(kind), lower_(lower), upper_(upper), values_(std::move(values))
    {
    }

    VariableKind kind_;
    double lower_;
    double upper_;
    std::vector<double> values_;
};

class SearchSpace
{
public:
    explicit SearchSpace(std::vector<VariableSpec> variables) : variables_(std::move(variables))
    {
        if (variables_.empty()) {
            throw InvalidDimension("search space needs at least one variable");
        }
    }

    std::size_t dimension() const noexcept { return variables_.size(); }
    const std::vector<VariableSpec>& variables() const noexcept { return variables_; }
    const VariableSpec& operator[](std::size_t i) const { return variables_.at(i); }

    bool operator==(const SearchSpace&) const = default;

private:
    std::vector<VariableSpec> variables_;
};

/// Nearest admissible grid value; an exact midpoint goes to the larger neighbour.
inline double snap_to_grid(const VariableSpec& spec, double x)
{
    if (!spec.is_grid()) {
        throw std::invalid_argument("snap_to_grid requires a grid variable");
    }
    const auto& grid = spec.values();
    auto hi = std::lower_bound(grid.begin(), grid.end(), x);
    if (hi == grid.begin()) {
        return grid.front();
    }
    if (hi == grid.end()) {
        return grid.back();
    }
    auto lo = std::prev(hi);
    return (*hi - x) <= (x - *lo) ? *hi : *lo;
}

inline void check_dimension(const SearchSpace& space, std::size_t n)
{
    if (n != space.dimension()) {
        throw InvalidDimension("expected a vector of length " + std::to_string(space.dimension()) + ", got " +
                               std::to_string(n));
    }
}

/// Map a point of the unit cube to problem units. Components are clamped to [0,1] before scaling
/// and grid variables are snapped afterwards, so the result always lies inside the bounds.
inline std::vector<double> denormalize(const SearchSpace& space, std::span<const double> u)
{
    check_dimension(space, u.size());
    std::vector<double> x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const auto& var = space[i];
        const double t = std::clamp(u[i], 0.0, 1.0);
        double xi = t * var.width() + var.lower();
        xi = std::clamp(xi, var.lower(), var.upper());
        x[i] = var.is_grid() ? snap_to_grid(var, xi) : xi;
    }
    return x;
}

inline std::vector<double> normalize(const SearchSpace& space, std::span<const double> x)
{
    check_dimension(space, x.size());
    std::vector<double> u(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& var = space[i];
        if (!(x[i] >= var.lower() && x[i] <= var.upper())) {
            throw OutOfBounds(i, x[i], var.lower(), var.upper());
        }
        // single-value grids have zero width
        u[i] = var.width() > 0.0 ? (x[i] - var.lower()) / var.width() : 0.0;
    }
    return u;
}

template <class URBG>
std::vector<double> random_unit_point(const SearchSpace& space, URBG& rng)
{
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> u(space.dimension());
    for (auto& ui : u) {
        ui = uniform(rng);
    }
    return u;
}

} // namespace baswpt
