#pragma once

#include <stdexcept>
#include <string>

namespace dynmono {

// Malformed or out-of-range caller input (files, flags, ids).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's preconditions.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive search refused because the instance exceeds the configured cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace dynmono
