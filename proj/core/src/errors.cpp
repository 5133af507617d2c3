#include "confrad/errors.hpp"

namespace confrad {

const char* name(Errc code) {
  switch (code) {
    case Errc::precondition: return "precondition";
    case Errc::non_monotone_angles: return "non_monotone_angles";
    case Errc::zero_modulus: return "zero_modulus";
    case Errc::degenerate_map: return "degenerate_map";
    case Errc::degenerate_triple: return "degenerate_triple";
    case Errc::pole_at_point: return "pole_at_point";
    case Errc::pole_outside_domain: return "pole_outside_domain";
    case Errc::infinity_not_in_domain: return "infinity_not_in_domain";
    case Errc::invalid_domain: return "invalid_domain";
    case Errc::image_not_canonical: return "image_not_canonical";
    case Errc::mismatch_beyond_tolerance: return "mismatch_beyond_tolerance";
    case Errc::missing_origin_domain: return "missing_origin_domain";
    case Errc::missing_infinity_domain: return "missing_infinity_domain";
    case Errc::disjointness_violated: return "disjointness_violated";
    case Errc::coincident_poles: return "coincident_poles";
    case Errc::non_positive_input: return "non_positive_input";
    case Errc::domain_error: return "domain_error";
    case Errc::singular_point: return "singular_point";
    case Errc::bracket_failure: return "bracket_failure";
    case Errc::outside_sector: return "outside_sector";
    case Errc::zero_input: return "zero_input";
    case Errc::off_ray: return "off_ray";
    case Errc::pole_evaluation: return "pole_evaluation";
    case Errc::seed_at_singularity: return "seed_at_singularity";
    case Errc::retry_exhausted: return "retry_exhausted";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace confrad
