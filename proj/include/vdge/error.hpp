#pragma once

#include <stdexcept>
#include <string>

namespace vdge {

enum class errc {
  ok = 0,
  invalid_argument,
  degenerate_pair,
  invalid_qubit_count,
  out_of_range,
  dimension_mismatch,
  zero_norm,
  too_large,
  empty_input,
  degenerate_run,
  io_error,
  parse_error,
};

// Library-wide exception type. Each throw site carries a code so the C API
// can translate failures into stable status values.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace vdge
