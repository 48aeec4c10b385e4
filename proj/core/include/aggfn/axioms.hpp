#pragma once

#include <string>
#include <vector>

#include "aggfn/aggregator.hpp"
#include "aggfn/report.hpp"
#include "aggfn/sampler.hpp"

namespace aggfn {

enum class MonotonicityGrade { nondecreasing, strict, unanimous };
enum class MeaningfulScale {
  io_ratio,     // A(r x) = r A(x)
  in_ratio,     // A(r x) = R_r A(x)
  io_interval,  // A(r x + s) = r A(x) + s
  in_interval,  // A(r x + s) = R A(x) + S
  io_ordinal,   // A(phi(x)) = phi(A(x))
  in_ordinal,   // order of outputs preserved under phi
};
enum class ComonotonicLaw { additive, minitive, maxitive };

/// Every checker takes a trailing tolerance; a negative value selects the
/// per-law default (1e-9 for metric laws, 1e-12 for comonotonic additivity,
/// exact comparison for lattice-only laws).
PropertyReport check_symmetry(const Aggregator& A, int n, const Sampler& s,
                              double tol = -1.0);
PropertyReport check_monotonicity(const Aggregator& A, int n,
                                  MonotonicityGrade grade, const Sampler& s,
                                  double tol = -1.0);
PropertyReport check_idempotency(const Aggregator& A, int n, const Sampler& s,
                                 bool weak = false, double tol = -1.0);
PropertyReport check_conjunctive(const Aggregator& A, int n, const Sampler& s,
                                 double tol = -1.0);
PropertyReport check_disjunctive(const Aggregator& A, int n, const Sampler& s,
                                 double tol = -1.0);
PropertyReport check_internal(const Aggregator& A, int n, const Sampler& s,
                              double tol = -1.0);
PropertyReport check_meaningfulness(const Aggregator& A, int n,
                                    MeaningfulScale scale, const Sampler& s,
                                    double tol = -1.0);
PropertyReport check_associativity(const Aggregator& A, const Sampler& s,
                                   double tol = -1.0);

/// Sequence-level laws for an n-indexed family (an aggregator valid for any
/// input length). All split points k are exercised for every n <= n_max.
PropertyReport check_sequence_associativity(const AggFn& family, int n_max,
                                            const Sampler& s, double tol = -1.0);
PropertyReport check_decomposability(const AggFn& family, int n_max,
                                     const Sampler& s, double tol = -1.0);
PropertyReport check_bisymmetry(const AggFn& family, int n_max,
                                const Sampler& s, double tol = -1.0);

PropertyReport check_comonotonic(const Aggregator& A, int n, ComonotonicLaw law,
                                 const Sampler& s, double tol = -1.0);
PropertyReport check_additivity(const Aggregator& A, int n, const Sampler& s,
                                double tol = -1.0);
PropertyReport check_non_compensation(const Aggregator& A, int n,
                                      const Sampler& s, double tol = -1.0);
PropertyReport check_weakly_minitive(const Aggregator& A, int n,
                                     const Sampler& s, double tol = -1.0);
PropertyReport check_weakly_maxitive(const Aggregator& A, int n,
                                     const Sampler& s, double tol = -1.0);

/// Heuristic only: probes for jumps larger than lipschitz * delta at
/// delta = 1e-6; a pass is labeled "continuity-smoke", never continuity.
PropertyReport check_continuity_smoke(const Aggregator& A, int n,
                                      const Sampler& s,
                                      double lipschitz = 1e3);

/// Stable string identifiers accepted by run_named_check / the CLI.
const std::vector<std::string>& property_names();

struct CheckConfig {
  Sampler sampler;
  int n = 3;          // arity for fixed-n laws when the aggregator is a family
  int n_max = 5;      // bound for sequence-level laws
  double tolerance = -1.0;  // < 0: per-law default
};

/// Dispatches a property name to its checker. Throws spec_error for unknown
/// names or when a sequence law is requested for a fixed-arity aggregator.
PropertyReport run_named_check(const Aggregator& A, const std::string& property,
                               const CheckConfig& config);

}  // namespace aggfn
