#pragma once

#include <stdexcept>
#include <string>

namespace powfree {

// Caller passed something outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A verification window was too shallow to decide a property.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search hit its configured limits.
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration node budget exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold exactly did not; usually means W is too small.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The glue driver would have broken the eta length bound.
class ConstructionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace powfree
