#pragma once

#include <stdexcept>
#include <string>

namespace pklab {

struct CrestPointError : std::runtime_error {
  explicit CrestPointError(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteError : std::runtime_error {
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParamsError : std::invalid_argument {
  explicit InvalidParamsError(const std::string& what) : std::invalid_argument(what) {}
};

struct BlowUpDomainError : std::domain_error {
  explicit BlowUpDomainError(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateError : std::invalid_argument {
  explicit DegenerateError(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularSystemError : std::runtime_error {
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySeriesError : std::invalid_argument {
  explicit EmptySeriesError(const std::string& what) : std::invalid_argument(what) {}
};

struct FlatFieldError : std::runtime_error {
  explicit FlatFieldError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureError : std::runtime_error {
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateMetricError : std::runtime_error {
  explicit DegenerateMetricError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pklab
