#ifndef FPS_ERRORS_HPP
#define FPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fps {

/// Thrown when textual input (rational strings, JSON documents) is malformed.
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's mathematical precondition is violated
/// (zero constant term, non-positive entries, order mismatch, ...).
struct precondition_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace fps

#endif
