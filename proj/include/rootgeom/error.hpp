#pragma once

#include <stdexcept>
#include <string>

namespace rootgeom {

// Raised for violated preconditions and failed internal verifications.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootgeom
