#pragma once

#include <stdexcept>
#include <string>

namespace eegswt {

// Raised for malformed command lines and configurations that fail validation
// before any computation starts.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised for unreadable or malformed input data (ragged CSV rows, non-numeric
// cells, missing sampling-rate line).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eegswt
