#pragma once

#include <stdexcept>
#include <string>

namespace etlink {

// Bad user configuration: unknown predictor, parameter out of range, a
// request the library refuses (e.g. exact ET above the node cap).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: singular systems, non-convergence.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace etlink
