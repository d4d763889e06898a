#pragma once

#include <stdexcept>
#include <string>

namespace layoutcode {

// Structural failure (bad input file, broken contract, I/O). Data-level
// problems such as unparseable model output are not errors; they are
// reported through result types.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

}  // namespace layoutcode
