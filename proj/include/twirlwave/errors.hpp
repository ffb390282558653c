#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twirlwave {

// Thrown when an argument violates an operation's precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solution audit found no sign variant annihilating the plane wave.
class audit_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Time stepping produced a non-finite value.
class evolution_aborted : public std::runtime_error {
 public:
  evolution_aborted(std::size_t step, const std::string& what)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  [[nodiscard]] std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace twirlwave
