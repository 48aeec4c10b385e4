#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aggfn {

/// Failure categories surfaced by the library. Validation never repairs
/// values; every rejection carries one of these codes.
enum class errc {
  boundary_violation,     // measure endpoints differ from 0 / 1
  monotonicity_violation, // mu(S) > mu(S + i) for some chain pair
  range_violation,        // value outside the required interval
  ground_set_too_large,   // exhaustive enumeration refused
  not_cardinality_based,  // measure_to_owa on a non-symmetric measure
  weight_error,           // weight vector fails its normalization
  domain_error,           // input outside a generator/mean domain
  range_error,            // value outside a generator range
  dimension_mismatch,     // vector length vs. measure ground set
  index_error,            // order statistic index out of range
  no_bracket,             // chisini target not enclosed by the bracket
  not_monotone,           // chisini diagonal not monotone on the bracket
  quadrature_failure,     // adaptive refinement hit the depth limit
  degenerate_g,           // cauchy mean with g(x) = g(y), x != y
  out_of_interval,        // archimedean/ordinal-sum argument outside [a,b]
  generator_not_normalized,
  spec_error,             // malformed aggregator/measure/weight spec
  io_error,
};

const char* to_string(errc code);

/// Single exception type for all library failures. `witness_a`/`witness_b`
/// hold subset bitmasks when the failure has a set-pair witness.
class AggError : public std::runtime_error {
 public:
  AggError(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  AggError(errc code, const std::string& message, std::uint32_t witness_a,
           std::uint32_t witness_b)
      : std::runtime_error(message),
        code_(code),
        witness_a_(witness_a),
        witness_b_(witness_b),
        has_witness_(true) {}

  errc code() const noexcept { return code_; }
  bool has_witness() const noexcept { return has_witness_; }
  std::uint32_t witness_a() const noexcept { return witness_a_; }
  std::uint32_t witness_b() const noexcept { return witness_b_; }

 private:
  errc code_;
  std::uint32_t witness_a_ = 0;
  std::uint32_t witness_b_ = 0;
  bool has_witness_ = false;
};

[[noreturn]] void raise(errc code, const std::string& message);

}  // namespace aggfn
