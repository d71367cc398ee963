#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ferrers {

// Raised by prime_index when the argument is composite or below 2.
class NotPrimeError : public std::invalid_argument {
 public:
  explicit NotPrimeError(std::uint64_t value)
      : std::invalid_argument("not a prime: " + std::to_string(value)),
        value_(value) {}

  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

// Raised when an exact result exceeds the supported 128-bit width.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised when an argument is outside an operation's stated domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ferrers
