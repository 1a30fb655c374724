#pragma once

#include <stdexcept>
#include <string>

namespace loopmod {

enum class Errc {
  not_latin,
  no_identity,
  entry_out_of_range,
  index_out_of_range,
  not_bijective,
  syntax_error,
  empty_side,
  unknown_builtin,
  nonlinear_point,
  unbound_variable,
  nonpositive_weight,
  length_mismatch,
  size_mismatch,
  cap_exceeded,
  empty_generator_set,
  unsupported_order,
  invalid_prefix,
  invalid_config,
  identity_fails,
  unsupported,
  bad_rational,
  bad_file,
};

/// Single exception type for the whole library; `code()` identifies the
/// failure class, the message carries the details (indices, offsets, ...).
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message, long offset = -1)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }

  /// Byte offset into the offending input, or -1 when not applicable.
  long offset() const noexcept { return offset_; }

private:
  Errc code_;
  long offset_;
};

} // namespace loopmod
