#pragma once

#include <stdexcept>
#include <string>

namespace denum {

// Input outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed decimal text.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An oracle or report would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consistency check inside the library failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace denum
