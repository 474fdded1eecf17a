#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace antwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (phi(0, y), degenerate
// closed-form denominators, non-positive weights, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A single walk ran past its step budget before reaching the food vertex.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t steps)
      : Error("walk exceeded step cap of " + std::to_string(steps) + " steps"),
        steps_(steps) {}

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  std::uint64_t steps_;
};

class SolveError : public Error {
 public:
  using Error::Error;
};

}  // namespace antwalk
