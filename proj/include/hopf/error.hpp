#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

enum class errc {
  not_unit,       // a unit-norm refinement failed its check
  not_pure,       // scalar part of a quaternion exceeds tolerance
  zero_vector,    // (0, 0) passed where a nonzero pair is required
  non_finite,     // NaN or overflow where a finite value is required
  unknown_check,  // verification check name outside the catalog
  invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::not_unit: return "NotUnit";
    case errc::not_pure: return "NotPure";
    case errc::zero_vector: return "ZeroVector";
    case errc::non_finite: return "NonFinite";
    case errc::unknown_check: return "UnknownCheck";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class error : public std::domain_error {
 public:
  error(errc code, const std::string& what)
      : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hopf
