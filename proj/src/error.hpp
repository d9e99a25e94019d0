/**
 * @file error.hpp
 * @brief Engine-wide error type: every failure carries a machine code and a
 *        human message.  Codes split "the mathematics refuses" (preconditions,
 *        unsupported fields) from genuine faults (parse, internal bugs).
 */
#pragma once

#include <stdexcept>
#include <string>

namespace sing {

enum class ErrCode {
  Parse,         ///< malformed input text (polynomial, field, frame, request)
  Precondition,  ///< a mathematical hypothesis of the operation is not met
  Unsupported,   ///< operation undefined over the requested field / shape
  InvalidArg,    ///< structurally bad argument (mixed fields, bad sizes, ...)
  Internal,      ///< invariant violation inside the engine; always a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  ErrCode code;
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

/// Internal consistency check that survives NDEBUG builds: these guard
/// theorem-backed equalities, so a violation must abort the computation
/// loudly instead of silently producing a wrong invariant.
inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) fail(ErrCode::Internal, msg);
}

}  // namespace sing
