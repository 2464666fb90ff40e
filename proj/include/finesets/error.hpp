#ifndef FINESETS_ERROR_HPP
#define FINESETS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finesets {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (bad word, bad composition, unknown id...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int lhs, int rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}
  int lhs() const { return lhs_; }
  int rhs() const { return rhs_; }

 private:
  int lhs_;
  int rhs_;
};

/// A computation would exceed its configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced a value that must be integral but is not.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected = {})
      : Error(format(message, position, expected)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t position,
                            const std::vector<std::string>& expected) {
    std::string out = "parse error at position " + std::to_string(position) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace finesets

#endif  // FINESETS_ERROR_HPP
