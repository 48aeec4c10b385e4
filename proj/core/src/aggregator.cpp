#include "aggfn/aggregator.hpp"

#include <cmath>
#include <memory>
#include <set>

#include <json.hpp>

#include "aggfn/assoc.hpp"
#include "aggfn/errors.hpp"
#include "aggfn/integrals.hpp"
#include "aggfn/means.hpp"
#include "aggfn/measure.hpp"
#include "aggfn/measure_io.hpp"

namespace aggfn {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& what,
                  std::set<std::string> allowed) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      raise(errc::spec_error, what + ": unknown key '" + key + "'");
}

double number_field(const json& obj, const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_number())
    raise(errc::spec_error, "missing numeric field '" + key + "'");
  return obj[key].get<double>();
}

// Number, or the strings "inf" / "-inf" where an extended value is allowed.
double extended_field(const json& obj, const std::string& key) {
  if (!obj.contains(key)) raise(errc::spec_error, "missing field '" + key + "'");
  const json& v = obj[key];
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  raise(errc::spec_error, "field '" + key + "' must be a number or \"inf\"/\"-inf\"");
}

std::vector<double> vector_field(const json& obj, const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_array())
    raise(errc::spec_error, "missing array field '" + key + "'");
  std::vector<double> out;
  for (const auto& v : obj[key]) {
    if (!v.is_number()) raise(errc::spec_error, "'" + key + "' entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Generator parse_generator(const json& g) {
  if (!g.is_object()) raise(errc::spec_error, "generator must be an object");
  if (!g.contains("family") || !g["family"].is_string())
    raise(errc::spec_error, "generator needs a string field 'family'");
  std::string family = g["family"].get<std::string>();

  Generator out = Generator::identity();
  if (family == "identity") {
    require_keys(g, "generator", {"family", "domain"});
  } else if (family == "power") {
    require_keys(g, "generator", {"family", "alpha", "domain"});
    out = Generator::power(number_field(g, "alpha"));
  } else if (family == "log") {
    require_keys(g, "generator", {"family", "domain"});
    out = Generator::log();
  } else if (family == "exp") {
    require_keys(g, "generator", {"family", "alpha", "domain"});
    out = Generator::exp(number_field(g, "alpha"));
  } else if (family == "reciprocal") {
    require_keys(g, "generator", {"family", "domain"});
    out = Generator::reciprocal();
  } else if (family == "affine") {
    require_keys(g, "generator", {"family", "r", "s", "domain"});
    out = Generator::affine(number_field(g, "r"), number_field(g, "s"));
  } else if (family == "neg-complement") {
    require_keys(g, "generator", {"family", "domain"});
    out = Generator::neg_complement();
  } else if (family == "composed") {
    require_keys(g, "generator", {"family", "outer", "inner", "domain"});
    if (!g.contains("outer") || !g.contains("inner"))
      raise(errc::spec_error, "composed generator needs 'outer' and 'inner'");
    out = Generator::compose(parse_generator(g["outer"]), parse_generator(g["inner"]));
  } else {
    raise(errc::spec_error, "unknown generator family '" + family + "'");
  }

  if (g.contains("domain")) {
    const json& d = g["domain"];
    if (!d.is_object()) raise(errc::spec_error, "'domain' must be an object");
    require_keys(d, "domain", {"lo", "hi", "lo_closed", "hi_closed"});
    Interval iv;
    if (d.contains("lo")) iv.lo = extended_field(d, "lo");
    if (d.contains("hi")) iv.hi = extended_field(d, "hi");
    iv.lo_closed = d.value("lo_closed", std::isfinite(iv.lo));
    iv.hi_closed = d.value("hi_closed", std::isfinite(iv.hi));
    out = out.with_domain(iv);
  }
  return out;
}

FuzzyMeasure parse_measure_ref(const json& m, const std::string& base_dir) {
  if (!m.is_object()) raise(errc::spec_error, "'measure' must be an object");
  if (m.contains("file")) {
    require_keys(m, "measure", {"file"});
    if (!m["file"].is_string()) raise(errc::spec_error, "'file' must be a string");
    std::string path = m["file"].get<std::string>();
    if (!base_dir.empty() && !path.empty() && path.front() != '/')
      path = base_dir + "/" + path;
    return read_measure_file(path);
  }
  return read_measure_json(m.dump());
}

Orientation parse_orientation(const json& obj) {
  if (!obj.contains("orientation") || !obj["orientation"].is_string())
    raise(errc::spec_error, "needs a string field 'orientation'");
  std::string o = obj["orientation"].get<std::string>();
  if (o == "conjunctive") return Orientation::conjunctive;
  if (o == "disjunctive") return Orientation::disjunctive;
  raise(errc::spec_error, "orientation must be 'conjunctive' or 'disjunctive'");
}

std::pair<double, double> parse_interval_pair(const json& obj,
                                              const std::string& key) {
  if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != 2 ||
      !obj[key][0].is_number() || !obj[key][1].is_number())
    raise(errc::spec_error, "'" + key + "' must be a pair of numbers");
  return {obj[key][0].get<double>(), obj[key][1].get<double>()};
}

std::optional<int> optional_n(const json& spec) {
  if (!spec.contains("n")) return std::nullopt;
  if (!spec["n"].is_number_integer() || spec["n"].get<int>() < 1)
    raise(errc::spec_error, "'n' must be a positive integer");
  return spec["n"].get<int>();
}

// Pins a family aggregator to the declared n, when present.
Aggregator finish(std::string kind, std::optional<int> declared,
                  std::optional<int> derived, AggFn fn) {
  if (declared && derived && *declared != *derived)
    raise(errc::spec_error, "declared n = " + std::to_string(*declared) +
                                " conflicts with parameters (n = " +
                                std::to_string(*derived) + ")");
  Aggregator a;
  a.kind = std::move(kind);
  a.arity = derived ? derived : declared;
  a.fn = std::move(fn);
  return a;
}

NormalizedForm parse_form(const json& spec) {
  if (!spec.contains("form") || !spec["form"].is_string())
    raise(errc::spec_error, "needs a string field 'form'");
  std::string f = spec["form"].get<std::string>();
  if (f == "luka") return NormalizedForm::luka;
  if (f == "strict-product") return NormalizedForm::strict_product;
  if (f == "dual-luka") return NormalizedForm::dual_luka;
  if (f == "dual-product") return NormalizedForm::dual_product;
  raise(errc::spec_error, "unknown form '" + f + "'");
}

}  // namespace

Aggregator parse_aggregator(const std::string& json_text,
                            const std::string& base_dir) {
  json spec;
  try {
    spec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    raise(errc::spec_error, std::string("aggregator JSON: ") + e.what());
  }
  if (!spec.is_object()) raise(errc::spec_error, "aggregator spec must be an object");
  if (!spec.contains("kind") || !spec["kind"].is_string())
    raise(errc::spec_error, "aggregator needs a string field 'kind'");
  std::string kind = spec["kind"].get<std::string>();
  std::optional<int> declared = optional_n(spec);

  // --- means ---
  if (kind == "arithmetic" || kind == "quadratic" || kind == "geometric" ||
      kind == "harmonic") {
    require_keys(spec, kind, {"kind", "n"});
    MeanSpec::Kind mk = kind == "arithmetic"  ? MeanSpec::Kind::arithmetic
                        : kind == "quadratic" ? MeanSpec::Kind::quadratic
                        : kind == "geometric" ? MeanSpec::Kind::geometric
                                              : MeanSpec::Kind::harmonic;
    MeanSpec m = MeanSpec::simple(mk);
    return finish(kind, declared, std::nullopt,
                  [m](std::span<const double> x) { return m.evaluate(x); });
  }
  if (kind == "root-power") {
    require_keys(spec, kind, {"kind", "alpha", "n"});
    double alpha = extended_field(spec, "alpha");
    return finish(kind, declared, std::nullopt, [alpha](std::span<const double> x) {
      return root_mean_power(x, alpha);
    });
  }
  if (kind == "exponential") {
    require_keys(spec, kind, {"kind", "alpha", "n"});
    double alpha = number_field(spec, "alpha");
    MeanSpec m = MeanSpec::exponential_of(alpha);
    return finish(kind, declared, std::nullopt,
                  [m](std::span<const double> x) { return m.evaluate(x); });
  }
  if (kind == "quasi-arithmetic") {
    require_keys(spec, kind, {"kind", "generator", "n"});
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator f = parse_generator(spec["generator"]);
    return finish(kind, declared, std::nullopt, [f](std::span<const double> x) {
      return quasi_arithmetic_mean(x, f);
    });
  }
  if (kind == "quasi-linear") {
    require_keys(spec, kind, {"kind", "generator", "weights", "n"});
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator f = parse_generator(spec["generator"]);
    WeightVector w = WeightVector::sum_one(vector_field(spec, "weights"));
    int n = w.size();
    return finish(kind, declared, n, [f, w](std::span<const double> x) {
      return quasi_linear_mean(x, w, f);
    });
  }
  if (kind == "quasi-linear-function") {
    require_keys(spec, kind, {"kind", "generator", "p", "q", "n"});
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator f = parse_generator(spec["generator"]);
    std::vector<double> p = vector_field(spec, "p");
    double q = number_field(spec, "q");
    int n = static_cast<int>(p.size());
    return finish(kind, declared, n, [f, p, q](std::span<const double> x) {
      return quasi_linear_function(x, p, q, f);
    });
  }

  // --- assoc ---
  if (kind == "aczelian") {
    require_keys(spec, kind, {"kind", "generator", "n"});
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator f = parse_generator(spec["generator"]);
    return finish(kind, declared, std::nullopt, [f](std::span<const double> x) {
      return aczelian_n(x, f);
    });
  }
  if (kind == "archimedean") {
    require_keys(spec, kind, {"kind", "orientation", "interval", "generator", "n"});
    auto [a, b] = parse_interval_pair(spec, "interval");
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    auto op = std::make_shared<ArchimedeanSpec>(parse_orientation(spec), a, b,
                                                parse_generator(spec["generator"]));
    return finish(kind, declared, std::nullopt, [op](std::span<const double> x) {
      return op->apply_n(x);
    });
  }
  if (kind == "normalized-form") {
    require_keys(spec, kind, {"kind", "form", "interval", "generator", "n"});
    auto [a, b] = parse_interval_pair(spec, "interval");
    NormalizedForm form = parse_form(spec);
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator g = parse_generator(spec["generator"]);
    return finish(kind, declared, std::nullopt,
                  [g, a, b, form](std::span<const double> x) {
                    return normalized_form_n(x, g, a, b, form);
                  });
  }
  if (kind == "ordinal-sum") {
    require_keys(spec, kind, {"kind", "orientation", "interval", "components", "n"});
    auto [a, b] = parse_interval_pair(spec, "interval");
    Orientation orient = parse_orientation(spec);
    if (!spec.contains("components") || !spec["components"].is_array())
      raise(errc::spec_error, "needs an array field 'components'");
    std::vector<OrdinalSumComponent> components;
    for (const json& c : spec["components"]) {
      if (!c.is_object()) raise(errc::spec_error, "component must be an object");
      require_keys(c, "component", {"interval", "generator"});
      auto [lo, hi] = parse_interval_pair(c, "interval");
      if (!c.contains("generator")) raise(errc::spec_error, "component needs 'generator'");
      components.push_back(OrdinalSumComponent{
          lo, hi,
          ArchimedeanSpec(orient, 0.0, 1.0, parse_generator(c["generator"]))});
    }
    auto op = std::make_shared<OrdinalSumSpec>(orient, a, b, std::move(components));
    return finish(kind, declared, 2, [op](std::span<const double> x) {
      if (x.size() != 2) raise(errc::dimension_mismatch, "ordinal sum is 2-ary");
      return op->apply(x[0], x[1]);
    });
  }
  if (kind == "alpha-beta") {
    require_keys(spec, kind, {"kind", "alpha", "beta", "n"});
    IdempotentAssocSpec ab{number_field(spec, "alpha"), number_field(spec, "beta")};
    return finish(kind, declared, std::nullopt, [ab](std::span<const double> x) {
      return alpha_beta_n(x, ab);
    });
  }
  if (kind == "median-assoc") {
    require_keys(spec, kind, {"kind", "alpha", "n"});
    double alpha = number_field(spec, "alpha");
    return finish(kind, declared, std::nullopt, [alpha](std::span<const double> x) {
      return median_assoc_n(x, alpha);
    });
  }
  if (kind == "czogala-drewniak") {
    require_keys(spec, kind, {"kind", "generator", "tie", "n"});
    if (!spec.contains("generator")) raise(errc::spec_error, "needs 'generator'");
    Generator g = parse_generator(spec["generator"]);
    TieRule tie = TieRule::take_min;
    if (spec.contains("tie")) {
      std::string t = spec["tie"].is_string() ? spec["tie"].get<std::string>() : "";
      if (t == "take-min") tie = TieRule::take_min;
      else if (t == "take-max") tie = TieRule::take_max;
      else raise(errc::spec_error, "'tie' must be 'take-min' or 'take-max'");
    }
    return finish(kind, declared, 2, [g, tie](std::span<const double> x) {
      if (x.size() != 2) raise(errc::dimension_mismatch, "czogala-drewniak is 2-ary");
      return czogala_drewniak(x[0], x[1], g, tie);
    });
  }

  // --- integrals ---
  if (kind == "choquet" || kind == "sugeno") {
    require_keys(spec, kind, {"kind", "measure", "n"});
    if (!spec.contains("measure")) raise(errc::spec_error, "needs 'measure'");
    auto mu = std::make_shared<FuzzyMeasure>(
        parse_measure_ref(spec["measure"], base_dir));
    int n = mu->n();
    if (kind == "choquet")
      return finish(kind, declared, n,
                    [mu](std::span<const double> x) { return choquet(x, *mu); });
    return finish(kind, declared, n,
                  [mu](std::span<const double> x) { return sugeno(x, *mu); });
  }
  if (kind == "owa" || kind == "wam") {
    require_keys(spec, kind, {"kind", "weights", "n"});
    WeightVector w = WeightVector::sum_one(vector_field(spec, "weights"));
    int n = w.size();
    if (kind == "owa")
      return finish(kind, declared, n,
                    [w](std::span<const double> x) { return owa(x, w); });
    return finish(kind, declared, n,
                  [w](std::span<const double> x) { return wam(x, w); });
  }
  if (kind == "pmax" || kind == "opmax") {
    require_keys(spec, kind, {"kind", "weights", "n"});
    WeightVector w = WeightVector::max_one(vector_field(spec, "weights"));
    int n = w.size();
    if (kind == "pmax")
      return finish(kind, declared, n,
                    [w](std::span<const double> x) { return pmax(x, w); });
    return finish(kind, declared, n,
                  [w](std::span<const double> x) { return opmax(x, w); });
  }
  if (kind == "pmin" || kind == "opmin") {
    require_keys(spec, kind, {"kind", "weights", "n"});
    WeightVector w = WeightVector::min_zero(vector_field(spec, "weights"));
    int n = w.size();
    if (kind == "pmin")
      return finish(kind, declared, n,
                    [w](std::span<const double> x) { return pmin(x, w); });
    return finish(kind, declared, n,
                  [w](std::span<const double> x) { return opmin(x, w); });
  }
  if (kind == "lattice-poly") {
    require_keys(spec, kind, {"kind", "n", "winning"});
    if (!declared) raise(errc::spec_error, "lattice-poly needs 'n'");
    if (!spec.contains("winning") || !spec["winning"].is_array())
      raise(errc::spec_error, "needs an array field 'winning'");
    std::vector<std::uint32_t> minimal;
    for (const json& set : spec["winning"]) {
      if (!set.is_array()) raise(errc::spec_error, "winning sets must be arrays");
      std::uint32_t mask = 0;
      for (const json& e : set) {
        if (!e.is_number_integer())
          raise(errc::spec_error, "winning set entries must be 1-based indices");
        int idx = e.get<int>();
        if (idx < 1 || idx > *declared)
          raise(errc::spec_error, "winning set index outside 1..n");
        mask |= 1u << (idx - 1);
      }
      minimal.push_back(mask);
    }
    auto gamma = std::make_shared<BinaryMeasure>(
        BinaryMeasure::from_minimal(*declared, minimal));
    return finish(kind, declared, *declared, [gamma](std::span<const double> x) {
      return lattice_polynomial(x, *gamma);
    });
  }
  if (kind == "order-statistic") {
    require_keys(spec, kind, {"kind", "k", "n"});
    if (!spec.contains("k") || !spec["k"].is_number_integer())
      raise(errc::spec_error, "needs an integer field 'k'");
    int k = spec["k"].get<int>();
    if (k < 1) raise(errc::spec_error, "'k' must be >= 1");
    if (declared && k > *declared)
      raise(errc::spec_error, "'k' exceeds the declared n");
    return finish(kind, declared, std::nullopt, [k](std::span<const double> x) {
      return order_statistic(x, k);
    });
  }

  raise(errc::spec_error, "unknown aggregator kind '" + kind + "'");
}

std::vector<std::string> aggregator_kinds() {
  return {"arithmetic",      "quadratic",
          "geometric",       "harmonic",
          "root-power",      "exponential",
          "quasi-arithmetic", "quasi-linear",
          "quasi-linear-function", "aczelian",
          "archimedean",     "normalized-form",
          "ordinal-sum",     "alpha-beta",
          "median-assoc",    "czogala-drewniak",
          "choquet",         "sugeno",
          "owa",             "wam",
          "pmax",            "pmin",
          "opmax",           "opmin",
          "lattice-poly",    "order-statistic"};
}

}  // namespace aggfn
