/* Apache License, Version 2.0 */
#ifndef RTOPO_ERRORS_HPP
#define RTOPO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rtopo {

// Domain error codes. Names are stable: they appear verbatim on the CLI's
// stderr and in the C API.
enum class Err {
  SelfIntersection,
  DegenerateRing,
  EmptyRegion,
  UnboundedRegion,
  DisconnectedLinkage,
  ParityViolation,
  RootNotAllowed,
  HasChildren,
  RootParentCollapse,
  EmptyResult,
  SyntaxError,
  UnknownRingRef,
  BadRational,
  IncompleteTable,
  Internal,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rtopo

#endif
