#pragma once

#include <stdexcept>
#include <string>

namespace casimirt {

// Thrown when an iterative evaluation cannot reach the requested accuracy.
// Carries the error actually achieved so callers can decide to accept it.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved(achieved_error) {}
  double achieved;
};

} // namespace casimirt
