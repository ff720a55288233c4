#pragma once

#include <stdexcept>
#include <string>

namespace msc {

/// Malformed set-cover or graph input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Query about something the instance does not contain (e.g. an unknown element).
class QueryError : public std::out_of_range {
 public:
  explicit QueryError(const std::string& what) : std::out_of_range(what) {}
};

/// Caller violated an operation's precondition.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Non-positive measure reduction handed to the branching-number solver.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Unknown stage, formula or option value.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace msc
