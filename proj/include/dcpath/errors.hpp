#ifndef DCPATH_ERRORS_HPP
#define DCPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcpath {

// Invalid input or unmet operation precondition. CLI exit code 1.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; always a bug, never an expected outcome.
// CLI exit code 2.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace dcpath

#endif
