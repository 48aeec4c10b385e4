#include "aggfn/errors.hpp"

#include <sstream>

#include "aggfn/interval.hpp"

namespace aggfn {

const char* to_string(errc code) {
  switch (code) {
    case errc::boundary_violation: return "boundary-violation";
    case errc::monotonicity_violation: return "monotonicity-violation";
    case errc::range_violation: return "range-violation";
    case errc::ground_set_too_large: return "ground-set-too-large";
    case errc::not_cardinality_based: return "not-cardinality-based";
    case errc::weight_error: return "weight-error";
    case errc::domain_error: return "domain-error";
    case errc::range_error: return "range-error";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::index_error: return "index-error";
    case errc::no_bracket: return "no-bracket";
    case errc::not_monotone: return "not-monotone";
    case errc::quadrature_failure: return "quadrature-failure";
    case errc::degenerate_g: return "degenerate-g";
    case errc::out_of_interval: return "out-of-interval";
    case errc::generator_not_normalized: return "generator-not-normalized";
    case errc::spec_error: return "spec-error";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

void raise(errc code, const std::string& message) {
  throw AggError(code, std::string(to_string(code)) + ": " + message);
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  return os.str();
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

}  // namespace aggfn
