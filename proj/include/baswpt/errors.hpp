#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace baswpt
{

class InvalidDimension : public std::invalid_argument
{
public:
    explicit InvalidDimension(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for malformed intervals, bounds and configuration values.
class InvalidRange : public std::invalid_argument
{
public:
    explicit InvalidRange(const std::string& what) : std::invalid_argument(what) {}
};

class OutOfBounds : public std::out_of_range
{
public:
    OutOfBounds(std::size_t index, double value, double lower, double upper)
        : std::out_of_range(describe(index, value, lower, upper)), index_(index)
    {
    }

    std::size_t index() const noexcept { return index_; }

private:
    static std::string describe(std::size_t index, double value, double lower, double upper)
    {
        std::ostringstream os;
        os.precision(17);
        os << "variable " << index << " = " << value << " outside [" << lower << ", " << upper << "]";
        return os.str();
    }

    std::size_t index_;
};

/// A non-finite objective, constraint or fitness value. Carries the point that produced it.
class EvaluationError : public std::runtime_error
{
public:
    EvaluationError(const std::string& what, std::vector<double> point)
        : std::runtime_error(what + " at " + format_point(point)), point_(std::move(point))
    {
    }

    const std::vector<double>& point() const noexcept { return point_; }

    static std::string format_point(const std::vector<double>& point)
    {
        std::ostringstream os;
        os.precision(17);
        os << '[';
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (i != 0) {
                os << ", ";
            }
            os << point[i];
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<double> point_;
};

class UnknownProblem : public std::invalid_argument
{
public:
    UnknownProblem(const std::string& name, const std::vector<std::string>& known)
        : std::invalid_argument(describe(name, known))
    {
    }

private:
    static std::string describe(const std::string& name, const std::vector<std::string>& known)
    {
        std::string msg = "unknown problem '" + name + "'; known problems:";
        for (const auto& k : known) {
            msg += ' ';
            msg += k;
        }
        return msg;
    }
};

class IoError : public std::runtime_error
{
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace baswpt
