#ifndef HOMOGOPT_ERRORS_HPP
#define HOMOGOPT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homogopt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression text. `offset` is the byte position of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation outside the mathematical domain: poles, non-finite results,
/// points where the averaging cube does not fit inside the box.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid operator, schedule, or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Quadrature failed to reach its tolerance; carries the achieved estimate.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved_estimate() const { return achieved_; }

private:
    double achieved_;
};

} // namespace homogopt

#endif
