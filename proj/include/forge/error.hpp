#pragma once

#include <stdexcept>

namespace forge {

// File could not be read or written (CLI exit code 2).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a format or a data invariant (CLI exit code 2).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure: divergence, non-finite values, failed factorization
// (CLI exit code 3).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace forge
