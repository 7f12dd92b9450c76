#pragma once

#include <stdexcept>

namespace dyntaylor {

// Thrown when a closed-form oracle is requested for a process kind that
// does not provide one.
class not_available_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyntaylor
