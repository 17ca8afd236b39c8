#pragma once

#include <stdexcept>
#include <string>

namespace hedgehog {

enum class ErrorKind {
  invalid_argument,        // violated precondition (bad ε, too few points, ...)
  parse,                   // malformed body / trace file
  parallel_edges,          // polygon has a pair of parallel edges
  long_edge,               // polygon has an edge whose endpoints are opposite
  centrally_symmetric,     // construction needs a non-symmetric body
  radius_too_small,        // arc smoothing radius below the admissible bound
  approximation_failure,   // sandwich polygon could not be verified
  search_exhausted,        // cut parameter search ran out (bug trap)
  invariant_regression,    // a cut did not increase the hull vertex count
  radius_schedule_exhausted,
  internal,                // a mathematical guarantee was falsified
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hedgehog
