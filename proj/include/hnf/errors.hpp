#pragma once

#include <stdexcept>
#include <string>

namespace hnf {

enum class errc {
  zero_denominator,
  zero_reciprocal,
  identically_zero,
  interior_pole,
  segment_order_violation,
  unsorted_breakpoints,
  out_of_domain,
  domain_mismatch,
  not_s_continuous,
  not_quasi_minimal,
  not_h_continuous,
  zero_divisor,
  non_representable_point,
  incompatible_images,
  ideal_not_dense,
  zero_function,
  modulus_violated,
  sandwich_violated,
  bridging_failed,
  eps_out_of_range,
  parse_error,
  io_error,
};

const char* errc_name(errc c);

/// Domain error raised by the algebra kernel.  Carries a stable code so
/// callers can branch without string matching.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace hnf
