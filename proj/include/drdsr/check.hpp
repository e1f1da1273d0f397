#pragma once

#include <sstream>
#include <stdexcept>

// Internal invariant checks. These guard algorithmic assumptions that the
// solvers rely on but cannot express in the type system. They are compiled
// into every build type; a failure indicates a bug, not bad user input,
// so the exception type is logic_error.
#define DRDSR_CHECK(cond, msg)                                              \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::ostringstream oss_;                                              \
      oss_ << "internal check failed at " << __FILE__ << ":" << __LINE__    \
           << ": " << msg;                                                  \
      throw std::logic_error(oss_.str());                                   \
    }                                                                       \
  } while (0)
