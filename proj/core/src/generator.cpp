#include "aggfn/generator.hpp"

#include <cmath>
#include <sstream>

#include "aggfn/errors.hpp"

namespace aggfn {

struct Generator::Node {
  Family family;
  double a = 0.0;  // alpha, or r for affine
  double b = 0.0;  // s for affine
  Interval domain;
  bool increasing = true;
  std::shared_ptr<const Node> outer;  // composed only
  std::shared_ptr<const Node> inner;
};

namespace {

using Node = Generator::Node;
using Family = Generator::Family;

double raw_value(const Node& g, double x) {
  switch (g.family) {
    case Family::identity: return x;
    case Family::power: return std::pow(x, g.a);
    case Family::log: return std::log(x);
    case Family::exp: return std::exp(g.a * x);
    case Family::reciprocal: return 1.0 / x;
    case Family::affine: return g.a * x + g.b;
    case Family::neg_complement: return 1.0 - x;
    case Family::composed: return raw_value(*g.outer, raw_value(*g.inner, x));
  }
  return 0.0;
}

double raw_inverse(const Node& g, double y) {
  switch (g.family) {
    case Family::identity: return y;
    case Family::power: return std::pow(y, 1.0 / g.a);
    case Family::log: return std::exp(y);
    case Family::exp: return std::log(y) / g.a;
    case Family::reciprocal: return 1.0 / y;
    case Family::affine: return (y - g.b) / g.a;
    case Family::neg_complement: return 1.0 - y;
    case Family::composed: return raw_inverse(*g.inner, raw_inverse(*g.outer, y));
  }
  return 0.0;
}

double raw_derivative(const Node& g, double x) {
  switch (g.family) {
    case Family::identity: return 1.0;
    case Family::power: return g.a * std::pow(x, g.a - 1.0);
    case Family::log: return 1.0 / x;
    case Family::exp: return g.a * std::exp(g.a * x);
    case Family::reciprocal: return -1.0 / (x * x);
    case Family::affine: return g.a;
    case Family::neg_complement: return -1.0;
    case Family::composed: {
      double u = raw_value(*g.inner, x);
      return raw_derivative(*g.outer, u) * raw_derivative(*g.inner, x);
    }
  }
  return 0.0;
}

Interval natural_domain(Family f) {
  switch (f) {
    case Family::power:
    case Family::log:
    case Family::reciprocal:
      return Interval::positive();
    default:
      return Interval::all();
  }
}

std::shared_ptr<const Node> make_node(Family f, double a, double b) {
  auto n = std::make_shared<Node>();
  n->family = f;
  n->a = a;
  n->b = b;
  n->domain = natural_domain(f);
  switch (f) {
    case Family::power: n->increasing = a > 0; break;
    case Family::exp: n->increasing = a > 0; break;
    case Family::reciprocal: n->increasing = false; break;
    case Family::affine: n->increasing = a > 0; break;
    case Family::neg_complement: n->increasing = false; break;
    default: n->increasing = true; break;
  }
  return n;
}

// Ranges use IEEE limits at open endpoints (log 0 -> -inf, 1/0 -> +inf,
// exp(-inf) -> 0, ...).
Interval node_range(const Node& g) {
  double at_lo = raw_value(g, g.domain.lo);
  double at_hi = raw_value(g, g.domain.hi);
  Interval r;
  if (g.increasing) {
    r.lo = at_lo;
    r.hi = at_hi;
    r.lo_closed = g.domain.lo_closed;
    r.hi_closed = g.domain.hi_closed;
  } else {
    r.lo = at_hi;
    r.hi = at_lo;
    r.lo_closed = g.domain.hi_closed;
    r.hi_closed = g.domain.lo_closed;
  }
  if (std::isinf(r.lo)) r.lo_closed = false;
  if (std::isinf(r.hi)) r.hi_closed = false;
  return r;
}

}  // namespace

Generator Generator::identity() { return Generator(make_node(Family::identity, 0, 0)); }

Generator Generator::power(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha))
    raise(errc::spec_error, "power generator needs finite alpha != 0");
  return Generator(make_node(Family::power, alpha, 0));
}

Generator Generator::log() { return Generator(make_node(Family::log, 0, 0)); }

Generator Generator::exp(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha))
    raise(errc::spec_error, "exp generator needs finite alpha != 0");
  return Generator(make_node(Family::exp, alpha, 0));
}

Generator Generator::reciprocal() {
  return Generator(make_node(Family::reciprocal, 0, 0));
}

Generator Generator::affine(double r, double s) {
  if (r == 0.0 || !std::isfinite(r) || !std::isfinite(s))
    raise(errc::spec_error, "affine generator needs finite r != 0");
  return Generator(make_node(Family::affine, r, s));
}

Generator Generator::neg_complement() {
  return Generator(make_node(Family::neg_complement, 0, 0));
}

Generator Generator::compose(const Generator& outer, const Generator& inner) {
  auto n = std::make_shared<Node>();
  n->family = Family::composed;
  n->outer = outer.node_;
  n->inner = inner.node_;
  n->increasing = !(outer.increasing() ^ inner.increasing());

  // Effective domain: the part of inner's domain whose image lies in
  // outer's domain.
  Interval inner_dom = inner.domain();
  Interval outer_dom = outer.domain();
  Interval inner_range = node_range(*inner.node_);
  Interval needed = intersect(inner_range, outer_dom);
  if (needed.empty())
    raise(errc::spec_error, "composed generator has empty domain");
  // Pull `needed` back through inner (monotone, closed-form inverse).
  double pre_lo = raw_inverse(*inner.node_, inner.increasing() ? needed.lo : needed.hi);
  double pre_hi = raw_inverse(*inner.node_, inner.increasing() ? needed.hi : needed.lo);
  Interval pre;
  pre.lo = pre_lo;
  pre.hi = pre_hi;
  pre.lo_closed = inner.increasing() ? needed.lo_closed : needed.hi_closed;
  pre.hi_closed = inner.increasing() ? needed.hi_closed : needed.lo_closed;
  if (std::isnan(pre.lo)) { pre.lo = inner_dom.lo; pre.lo_closed = inner_dom.lo_closed; }
  if (std::isnan(pre.hi)) { pre.hi = inner_dom.hi; pre.hi_closed = inner_dom.hi_closed; }
  n->domain = intersect(pre, inner_dom);
  return Generator(n);
}

Generator Generator::with_domain(const Interval& d) const {
  Interval merged = intersect(d, node_->domain);
  if (merged.empty())
    raise(errc::spec_error,
          "domain restriction " + d.to_string() + " is empty inside " +
              node_->domain.to_string());
  auto n = std::make_shared<Node>(*node_);
  n->domain = merged;
  return Generator(n);
}

double Generator::evaluate(double x) const {
  if (!node_->domain.contains(x))
    raise(errc::domain_error, describe() + " undefined at " + std::to_string(x) +
                                  ", domain " + node_->domain.to_string());
  return raw_value(*node_, x);
}

double Generator::value_closure(double x) const {
  if (!node_->domain.contains_closure(x))
    raise(errc::domain_error, describe() + " closure evaluation outside " +
                                  node_->domain.to_string());
  return raw_value(*node_, x);
}

double Generator::invert(double y) const {
  Interval r = range();
  if (!r.contains(y))
    raise(errc::range_error, describe() + " has no preimage of " +
                                 std::to_string(y) + ", range " + r.to_string());
  return raw_inverse(*node_, y);
}

double Generator::inverse_closure(double y) const {
  Interval r = range();
  if (!r.contains_closure(y))
    raise(errc::range_error, describe() + " closure inversion outside " +
                                 r.to_string());
  double x = raw_inverse(*node_, y);
  // Clamp the IEEE limit onto the domain closure (e.g. exp(-inf) -> 0 when
  // the subinterval starts above 0).
  if (x < node_->domain.lo) x = node_->domain.lo;
  if (x > node_->domain.hi) x = node_->domain.hi;
  return x;
}

double Generator::derivative(double x) const {
  if (!node_->domain.contains(x))
    raise(errc::domain_error, describe() + " derivative undefined at " +
                                  std::to_string(x));
  return raw_derivative(*node_, x);
}

bool Generator::increasing() const { return node_->increasing; }
const Interval& Generator::domain() const { return node_->domain; }
Interval Generator::range() const { return node_range(*node_); }
Generator::Family Generator::family() const { return node_->family; }
double Generator::param_a() const { return node_->a; }
double Generator::param_b() const { return node_->b; }

Generator Generator::outer() const { return Generator(node_->outer); }
Generator Generator::inner() const { return Generator(node_->inner); }

std::string Generator::describe() const {
  std::ostringstream os;
  switch (node_->family) {
    case Family::identity: os << "identity"; break;
    case Family::power: os << "power(" << node_->a << ")"; break;
    case Family::log: os << "log"; break;
    case Family::exp: os << "exp(" << node_->a << ")"; break;
    case Family::reciprocal: os << "reciprocal"; break;
    case Family::affine: os << "affine(" << node_->a << "," << node_->b << ")"; break;
    case Family::neg_complement: os << "neg-complement"; break;
    case Family::composed:
      os << Generator(node_->outer).describe() << " o "
         << Generator(node_->inner).describe();
      break;
  }
  return os.str();
}

}  // namespace aggfn
