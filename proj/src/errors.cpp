#include "hnf/errors.hpp"

namespace hnf {

const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::zero_reciprocal: return "ZeroReciprocal";
    case errc::identically_zero: return "IdenticallyZero";
    case errc::interior_pole: return "InteriorPole";
    case errc::segment_order_violation: return "SegmentOrderViolation";
    case errc::unsorted_breakpoints: return "UnsortedBreakpoints";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::not_s_continuous: return "NotSContinuous";
    case errc::not_quasi_minimal: return "NotQuasiMinimal";
    case errc::not_h_continuous: return "NotHContinuous";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::non_representable_point: return "NonRepresentablePoint";
    case errc::incompatible_images: return "IncompatibleImages";
    case errc::ideal_not_dense: return "IdealNotDense";
    case errc::zero_function: return "ZeroFunction";
    case errc::modulus_violated: return "ModulusViolated";
    case errc::sandwich_violated: return "SandwichViolated";
    case errc::bridging_failed: return "BridgingFailed";
    case errc::eps_out_of_range: return "EpsOutOfRange";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IOError";
  }
  return "UnknownError";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw error(code, message); }

}  // namespace hnf
