#include "aggfn/signature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aggfn/errors.hpp"

namespace aggfn {

InvariantSignature invariant_signature(std::span<const double> x) {
  for (double xi : x)
    if (!std::isfinite(xi)) raise(errc::domain_error, "signature needs finite components");
  InvariantSignature sig;
  sig.perm.resize(x.size());
  std::iota(sig.perm.begin(), sig.perm.end(), 0);
  std::stable_sort(sig.perm.begin(), sig.perm.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  if (!x.empty()) {
    sig.rel.reserve(x.size() - 1);
    for (size_t i = 0; i + 1 < x.size(); ++i)
      sig.rel.push_back(x[sig.perm[i]] == x[sig.perm[i + 1]] ? Rel::equal
                                                             : Rel::strict);
  }
  return sig;
}

std::string to_string(const InvariantSignature& sig) {
  std::string s = "pi=(";
  for (size_t i = 0; i < sig.perm.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sig.perm[i] + 1);
  }
  s += ") rel=(";
  for (size_t i = 0; i < sig.rel.size(); ++i) {
    if (i) s += ",";
    s += sig.rel[i] == Rel::strict ? "<" : "=";
  }
  s += ")";
  return s;
}

}  // namespace aggfn
