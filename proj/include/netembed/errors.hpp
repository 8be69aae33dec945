#pragma once

#include <stdexcept>
#include <string>

namespace netembed {

// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IsolatedNodeError : public std::runtime_error {
 public:
  explicit IsolatedNodeError(std::size_t node)
      : std::runtime_error("node " + std::to_string(node) +
                           " has no neighbors"),
        node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

// An iterative solver failed to reach its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace netembed
