#pragma once

#include <stdexcept>
#include <string>

namespace trusslab {

enum class Errc {
  none,
  size_mismatch,
  not_associative,
  not_idempotent,
  not_a_group,
  no_identity,
  missing_inverse,
  not_verified,
  empty_subset,
  precondition_violated,
  postcondition_violated,
  iota_not_bijective,
  order_too_large,
  syntax,
  range,
  kind_field_mismatch,
  io_error,
};

char const* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& message) : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trusslab
