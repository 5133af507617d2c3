#pragma once

#include <stdexcept>
#include <string>

namespace confrad {

// One enumerator per distinct failure condition so callers (and tests) can
// match on the exact cause instead of parsing messages.
enum class Errc {
  precondition,
  non_monotone_angles,
  zero_modulus,
  degenerate_map,
  degenerate_triple,
  pole_at_point,
  pole_outside_domain,
  infinity_not_in_domain,
  invalid_domain,
  image_not_canonical,
  mismatch_beyond_tolerance,
  missing_origin_domain,
  missing_infinity_domain,
  disjointness_violated,
  coincident_poles,
  non_positive_input,
  domain_error,
  singular_point,
  bracket_failure,
  outside_sector,
  zero_input,
  off_ray,
  pole_evaluation,
  seed_at_singularity,
  retry_exhausted,
};

const char* name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace confrad
