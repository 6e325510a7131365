#pragma once

#include <stdexcept>
#include <string>

namespace setmosaic {

// Raised for any invalid input data or contract violation: malformed
// files, unknown labels, broken invariants. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setmosaic
