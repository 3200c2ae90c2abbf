#pragma once

#include <stdexcept>
#include <string>

namespace phlab {

// Raised on precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phlab
