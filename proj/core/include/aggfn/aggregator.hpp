#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace aggfn {

using AggFn = std::function<double(std::span<const double>)>;

/// A constructed aggregator: the evaluation closure plus what the checkers
/// and the CLI need to know about it. `arity` is set for kinds whose input
/// length is fixed by their parameters (a measure, a weight vector); family
/// kinds (arithmetic, quasi-arithmetic, ...) accept any length.
struct Aggregator {
  std::string kind;
  std::optional<int> arity;
  AggFn fn;

  double operator()(std::span<const double> x) const { return fn(x); }
};

/// Parses an AggregatorSpec JSON document, e.g.
///   {"kind":"owa","weights":[0.5,0.3,0.2]}
///   {"kind":"quasi-arithmetic","generator":{"family":"power","alpha":2}}
///   {"kind":"choquet","measure":{"n":2,"array":[0,0.3,0.6,1]}}
/// Unknown keys are rejected. `base_dir` resolves relative measure file
/// references ({"measure":{"file":"mu.json"}}).
Aggregator parse_aggregator(const std::string& json_text,
                            const std::string& base_dir = "");

/// Catalog of accepted "kind" tags, for `list` and diagnostics.
std::vector<std::string> aggregator_kinds();

}  // namespace aggfn
