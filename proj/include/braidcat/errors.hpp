#ifndef BRAIDCAT_ERRORS_HPP
#define BRAIDCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidcat {

// Bad arguments, malformed files, dimension mismatches.  CLI exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero and friends.
class ArithmeticError : public std::runtime_error {
public:
  explicit ArithmeticError(const std::string& msg) : std::runtime_error(msg) {}
};

// Substitution made a denominator vanish identically.
class PoleCollapseError : public ArithmeticError {
public:
  explicit PoleCollapseError(const std::string& msg) : ArithmeticError(msg) {}
};

// Expression syntax error; offset is the byte position in the input.
class ParseError : public InputError {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : InputError(msg + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace braidcat

#endif
