#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace steerkit {

// Conditioning on an outcome whose marginal probability is (numerically) zero.
// Distinct from std::invalid_argument: the arguments are well-formed, the
// requested conditional just does not exist for this state.
class DegenerateConditionError : public std::runtime_error {
 public:
  explicit DegenerateConditionError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// An objective or numerical routine produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what_arg, std::vector<double> angles)
      : std::runtime_error(what_arg), angles_(std::move(angles)) {}
  const std::vector<double>& angles() const { return angles_; }

 private:
  std::vector<double> angles_;
};

}  // namespace steerkit
