#pragma once

#include <stdexcept>
#include <string>

namespace blocktower {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input or configuration supplied by the caller.
struct validation_error : error {
  using error::error;
};

// A size or feasibility cap was exceeded.  Never silent truncation.
struct cap_error : validation_error {
  using validation_error::validation_error;
};

// A property that is mathematically guaranteed failed to hold.  This always
// signals an implementation bug, never a property of the input.
struct check_error : error {
  using error::error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw validation_error(msg);
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw check_error(msg);
}

}  // namespace blocktower
