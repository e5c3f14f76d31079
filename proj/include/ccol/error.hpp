#pragma once

#include <stdexcept>
#include <string>

namespace ccol {

// Violated precondition of a library operation.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed instance or solution text; carries the 1-based source line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ccol
