#pragma once

#include <stdexcept>
#include <string>

namespace slt {

enum class Errc {
  ParseError,
  BadInterval,
  NonPositiveMinor,
  BadPotential,
  BadAngles,
  BadGrid,
  BadRange,
  InterfacePoint,
  NotAnEigenvalue,
  IndexOutOfRange,
  EmptyResult,
  SingularResolvent,
  StepSizeUnderflow,
  NonFiniteState,
  NoConvergence,
  JacobiNoConvergence,
  GridMismatch,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

const char* errc_name(Errc c) noexcept;

/// Process exit contract: 0 success, 1 input error, 2 empty/out-of-range
/// result, 3 singular resolvent, 4 numerical failure.
int exit_code(Errc c) noexcept;

[[noreturn]] inline void raise(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace slt
