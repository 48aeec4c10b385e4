#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aggfn {

enum class Rel : std::uint8_t { strict, equal };

/// Order-pattern of a vector: the stable sorting permutation plus the
/// strict/equal relations between consecutive sorted components. Two vectors
/// have equal signatures iff one is the image of the other under a strictly
/// increasing bijection of R.
struct InvariantSignature {
  std::vector<int> perm;  // 0-based; perm[i] = original index of i-th smallest
  std::vector<Rel> rel;   // size n-1

  bool operator==(const InvariantSignature&) const = default;
};

/// Ties broken by ascending original index (stable sort).
InvariantSignature invariant_signature(std::span<const double> x);

/// Rendered 1-based, e.g. "pi=(2,1,3) rel=(<,=)".
std::string to_string(const InvariantSignature& sig);

}  // namespace aggfn
