#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aggfn {

inline constexpr double kEpsLaw = 1e-9;  // default tolerance for metric laws

enum class Verdict {
  holds_on_samples,  // no violation found; never a proof
  fails,             // witness re-evaluates to a violation beyond tolerance
};

/// Inputs and values exhibiting a violation.
struct Witness {
  std::vector<std::vector<double>> inputs;
  std::vector<double> values;
  double violation = 0.0;
  std::string note;
};

/// Result of one axiom check. Rendering is deterministic: identical seed and
/// configuration give byte-identical text and JSON.
struct PropertyReport {
  std::string property;  // stable identifier, e.g. "comonotonic-additive"
  Verdict verdict = Verdict::holds_on_samples;
  std::optional<Witness> witness;
  long samples_used = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string note;

  bool holds() const { return verdict == Verdict::holds_on_samples; }

  std::string to_text() const;
  std::string to_json() const;
};

/// 17-significant-digit rendering used everywhere a double becomes text.
std::string format_double(double v);

}  // namespace aggfn
