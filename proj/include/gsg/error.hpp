#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsg {

/// Malformed input: bad file syntax, out-of-range indices, mismatched carriers.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
  input_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 0 when the error is not tied to a line of text.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// A derived structure could not be built (e.g. an ill-defined quotient product).
class construction_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsg
