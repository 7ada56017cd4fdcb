/*******************************************************************************
 * @file:   errors.h
 * @brief:  Exception types reported by the library.
 ******************************************************************************/
#pragma once

#include <stdexcept>
#include <string>

namespace nodesep {
/// Malformed graph input (METIS text or inconsistent adjacency).
class GraphFormatError : public std::runtime_error {
public:
  GraphFormatError(const std::string &what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), _line(line) {}
  explicit GraphFormatError(const std::string &what) : std::runtime_error(what), _line(0) {}

  [[nodiscard]] std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

/// The requested separator cannot exist (too many blocks, block limit below a
/// node weight, ...).
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};
} // namespace nodesep
