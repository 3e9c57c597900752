#include "fewweight/common.hpp"

namespace fewweight {

const char* errc_name(errc e) {
  switch (e) {
    case errc::not_prime: return "not_prime";
    case errc::even_characteristic: return "even_characteristic";
    case errc::degree_too_small: return "degree_too_small";
    case errc::reducible_modulus: return "reducible_modulus";
    case errc::size_cap_exceeded: return "size_cap_exceeded";
    case errc::division_by_zero: return "division_by_zero";
    case errc::mixed_contexts: return "mixed_contexts";
    case errc::not_a_divisor: return "not_a_divisor";
    case errc::not_in_subfield: return "not_in_subfield";
    case errc::zero_input: return "zero_input";
    case errc::mixed_prime: return "mixed_prime";
    case errc::overflow: return "overflow";
    case errc::parameter_outside_field: return "parameter_outside_field";
    case errc::wrong_characteristic: return "wrong_characteristic";
    case errc::odd_degree: return "odd_degree";
    case errc::k_divisible_by_3: return "k_divisible_by_3";
    case errc::case_other: return "case_other";
    case errc::not_admissible: return "not_admissible";
    case errc::not_negation_closed: return "not_negation_closed";
    case errc::empty_defining_set: return "empty_defining_set";
    case errc::not_even: return "not_even";
    case errc::nonzero_at_origin: return "nonzero_at_origin";
    case errc::moment_violation: return "moment_violation";
    case errc::hypothesis_unmet: return "hypothesis_unmet";
    case errc::parse_error: return "parse_error";
    case errc::config_error: return "config_error";
    case errc::internal_error: return "internal_error";
  }
  return "unknown";
}

}  // namespace fewweight
