#pragma once

#include <stdexcept>
#include <string>

namespace arasent {

// Problems with input data or resource files. The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arasent
