#pragma once

#include <stdexcept>
#include <string>

namespace boxed_bertrand {

// Precondition violations, mapped to exit code 1 by the CLI.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResolutionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A chord is a pair of distinct boxes.
class InvalidChord : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CapExceeded : public InvalidArgument {
 public:
  CapExceeded(const std::string& what, double estimated_cost)
      : InvalidArgument(what), estimated_cost_(estimated_cost) {}
  double estimated_cost() const noexcept { return estimated_cost_; }

 private:
  double estimated_cost_;
};

class ToleranceUnreachable : public std::runtime_error {
 public:
  ToleranceUnreachable(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Internal consistency failure (a bug, not misuse); exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace boxed_bertrand
