#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "baswpt/benchmarks.hpp"
#include "baswpt/variable_space.hpp"

namespace baswpt
{

/// A published reference solution, kept as printed so the rounding of every cell is known.
struct ReferenceRow
{
    std::string label;
    std::vector<std::string> x;
    std::vector<std::string> g;
    std::string f;
    /// Non-empty when the row is excluded from checking.
    std::string skip_reason;
};

struct ReferenceTable
{
    std::string name;
    std::string problem;
    SearchSpace space;
    ScalarFunction objective;
    /// The quantities printed in the g columns, in column order.
    std::vector<ScalarFunction> g_columns;
    double f_relative_tolerance;
    std::vector<ReferenceRow> rows;
};

struct CellCheck
{
    std::string table;
    std::string row;
    std::string column;
    double printed;
    double computed;
    double tolerance;
    bool passed;
};

struct SkippedRow
{
    std::string table;
    std::string row;
    std::string reason;
};

struct TableCheckReport
{
    std::vector<CellCheck> cells;
    std::vector<SkippedRow> skipped;

    bool passed() const
    {
        return std::all_of(cells.begin(), cells.end(), [](const CellCheck& c) { return c.passed; });
    }

    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return !c.passed; }));
    }
};

/// Half a unit in the last printed digit: "42.0984" -> 5e-5, "-8.8000e-7" -> 5e-12, "92" -> 0.5.
inline double half_unit_last_place(const std::string& printed)
{
    const auto epos = printed.find_first_of("eE");
    const std::string mantissa = printed.substr(0, epos);
    const int exponent = epos == std::string::npos ? 0 : std::stoi(printed.substr(epos + 1));
    const auto dot = mantissa.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
    return 0.5 * std::pow(10.0, exponent - decimals);
}

inline std::vector<double> parse_cells(const std::vector<std::string>& cells)
{
    std::vector<double> v;
    v.reserve(cells.size());
    for (const auto& c : cells) {
        v.push_back(std::stod(c));
    }
    return v;
}

/// Largest change of `fn` explained by rounding the printed inputs: sum_i |dfn/dx_i| * half_ulp_i,
/// slopes by central differences. Grid-valued inputs that sit exactly on the grid carry no rounding.
inline double input_rounding_bound(const ScalarFunction& fn, const SearchSpace& space, std::span<const double> x,
                                   const std::vector<std::string>& printed_x)
{
    double bound = 0.0;
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& var = space[i];
        if (var.is_grid() && snap_to_grid(var, x[i]) == x[i]) {
            continue;
        }
        const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
        probe[i] = x[i] + h;
        const double up = fn(probe);
        probe[i] = x[i] - h;
        const double down = fn(probe);
        probe[i] = x[i];
        bound += std::abs(up - down) / (2.0 * h) * half_unit_last_place(printed_x[i]);
    }
    return bound;
}

inline std::vector<ReferenceTable> reference_tables()
{
    namespace pv = pressure_vessel_terms;
    namespace hb = himmelblau_terms;
    const std::string violated = "marked as violating a constraint";
    const std::string own = "the algorithm's own result; checked by the optimizer acceptance runs instead";

    ReferenceTable vessel{
        "pressure-vessel",
        "pressure-vessel",
        pressure_vessel().space,
        pv::cost,
        {pv::shell_thickness, pv::head_thickness, pv::volume, pv::length},
        0.005,
        {
            {"row 1", {"0.8125", "0.4375", "42.0984", "176.6378"}, {"-8.8000e-7", "-0.0359", "-3.5586", "-63.3622"}, "6059.7258", ""},
            {"row 2", {"1", "0.625", "51.2519", "90.9913"}, {"-1.011", "-0.136", "-18759.75", "-149.009"}, "7172.300", ""},
            {"row 3", {"0.8125", "0.4375", "42.0870", "176.7791"}, {"-2.210e-4", "-0.03599", "-3.51084", "-63.2208"}, "6061.1229", ""},
            {"row 4", {"1.000", "0.625", "51.000", "91.000"}, {"-0.0157", "-0.1385", "-3233.916", "-149"}, "7079.037", ""},
            {"row 5", {"0.8125", "0.4375", "41.9768", "182.2845"}, {"-0.0023", "-0.0370", "-22888.07", "-57.7155"}, "6171.000", ""},
            {"row 6", {"1.125", "0.625", "58.291", "43.690"}, {"0.000016", "-0.0689", "-21.2201", "-196.3100"}, "7198.0428", ""},
            {"row 7", {"0.9375", "0.5000", "48.3290", "112.6790"}, {"-0.0048", "-0.0389", "-3652.877", "-127.3210"}, "6410.3811", ""},
            {"row 8", {"0.8125", "0.4375", "40.3239", "200.0000"}, {"-0.034324", "-0.05285", "-27.10585", "-40.0000"}, "6288.7445", ""},
            {"row 9", {"1.125", "0.625", "58.1978", "44.2930"}, {"-0.00178", "-0.06979", "-974.3", "-195.707"}, "7207.494", ""},
            {"row 10", {"1.125", "0.625", "48.97", "106.72"}, {"-0.1799", "-0.1578", "97.760", "-132.28"}, "7980.894", ""},
            {"row 11", {"1.125", "0.625", "58.2789", "43.7549"}, {"-0.0002", "-0.06902", "-3.71629", "-196.245"}, "7198.433", ""},
            {"row 12", {"0.7782", "0.3846", "40.3196", "200.000"}, {"-3.172e-5", "4.8984e-5", "1.3312", "-40"}, "5885.33", violated},
            {"BAS-WPT", {"0.8125", "0.4375", "42.09355", "42.09355"}, {"-9.43E-05", "-0.03592", "-413.6252", "-63.2285"}, "6062.04676",
             own + "; printed x4 repeats x3 and is inconsistent with the printed g3, g4 and f"},
        },
    };

    ReferenceTable himmel{
        "himmelblau",
        "himmelblau",
        himmelblau().space,
        hb::objective,
        {hb::g1, hb::g2, hb::g3},
        0.001,
        {
            {"row 1", {"78.00", "33.00", "29.995256", "45.00", "36.775813"}, {"92", "98.8405", "20"}, "-30665.54", ""},
            {"row 2", {"78.6200", "33.4400", "31.0700", "44.1800", "35.2200"}, {"90.5208", "98.8929", "20.1316"}, "-30373.949", ""},
            {"row 3", {"81.4900", "34.0900", "31.2400", "42.2000", "34.3700"}, {"90.5225", "99.3188", "20.0604"}, "-30183.576", ""},
            {"row 4", {"78.00", "33.00", "29.995", "45.00", "36.776"}, {"90.7147", "98.8405", "19.9999"}, "-30665.6088", violated},
            {"BAS-WPT", {"78.00", "33.00", "27.1131", "45.00", "45.00"}, {"91.9997", "100.4170", "20.02056"}, "-31011.3244", own},
        },
    };
    return {vessel, himmel};
}

/// Re-evaluate every non-excluded reference row. x cells must lie in the variable domain
/// (on the grid for grid variables); f must match within the table's relative tolerance; g cells
/// match within max(relative tolerance, rounding of the printed inputs and output).
inline TableCheckReport verify_tables()
{
    TableCheckReport report;
    for (const auto& table : reference_tables()) {
        for (const auto& row : table.rows) {
            if (!row.skip_reason.empty()) {
                report.skipped.push_back({table.name, row.label, row.skip_reason});
                continue;
            }
            const auto x = parse_cells(row.x);
            for (std::size_t i = 0; i < x.size(); ++i) {
                const auto& var = table.space[i];
                bool ok = x[i] >= var.lower() && x[i] <= var.upper();
                if (ok && var.is_grid()) {
                    ok = snap_to_grid(var, x[i]) == x[i];
                }
                report.cells.push_back({table.name, row.label, "x" + std::to_string(i + 1), x[i], x[i], 0.0, ok});
            }
            for (std::size_t j = 0; j < table.g_columns.size(); ++j) {
                const double printed = std::stod(row.g[j]);
                const double computed = table.g_columns[j](x);
                const double rounding = half_unit_last_place(row.g[j]) +
                                        input_rounding_bound(table.g_columns[j], table.space, x, row.x);
                const double tol = std::max(table.f_relative_tolerance * std::abs(printed), rounding);
                report.cells.push_back({table.name, row.label, "g" + std::to_string(j + 1), printed, computed, tol,
                                        std::abs(computed - printed) <= tol});
            }
            const double printed_f = std::stod(row.f);
            const double computed_f = table.objective(x);
            const double tol_f = table.f_relative_tolerance * std::abs(printed_f);
            report.cells.push_back(
                {table.name, row.label, "f*", printed_f, computed_f, tol_f, std::abs(computed_f - printed_f) <= tol_f});
        }
    }
    return report;
}

inline std::string format_table_check(const TableCheckReport& report)
{
    std::ostringstream os;
    char line[256];
    for (const auto& c : report.cells) {
        std::snprintf(line, sizeof line, "%-4s %-16s %-8s %-4s printed=%-14.10g computed=%-14.10g tol=%.3g\n",
                      c.passed ? "ok" : "FAIL", c.table.c_str(), c.row.c_str(), c.column.c_str(), c.printed,
                      c.computed, c.tolerance);
        os << line;
    }
    for (const auto& s : report.skipped) {
        os << "skip " << s.table << ' ' << s.row << ": " << s.reason << '\n';
    }
    os << report.cells.size() - report.failures() << '/' << report.cells.size() << " cells passed\n";
    return os.str();
}

} // namespace baswpt
