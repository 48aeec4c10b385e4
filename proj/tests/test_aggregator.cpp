#include <doctest.h>

#include <fstream>

#include "support.hpp"

using namespace aggfn;
using namespace testsupport;

namespace {

double eval1(const Aggregator& a, std::vector<double> x) { return a.fn(x); }

}  // namespace

TEST_CASE("aggregator specs build every catalog kind") {
  CHECK(close(eval1(parse_aggregator(R"({"kind":"arithmetic"})"), {1, 2, 3}), 2.0));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"geometric"})"), {2, 8}), 4.0));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"harmonic"})"), {1, 3}), 1.5));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"root-power","alpha":2})"), {3, 4}),
              std::sqrt(12.5)));
  CHECK(eval1(parse_aggregator(R"({"kind":"root-power","alpha":"-inf"})"),
              {5, 1, 9}) == 1.0);
  CHECK(close(eval1(parse_aggregator(R"({"kind":"exponential","alpha":1})"), {2, 2}),
              2.0));
  CHECK(close(eval1(parse_aggregator(
                  R"({"kind":"quasi-arithmetic","generator":{"family":"log"}})"),
              {2, 8}),
              4.0));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"quasi-linear",
      "generator":{"family":"identity"},"weights":[0.7,0.3]})"),
              {0, 10}),
              3.0));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"quasi-linear-function",
      "generator":{"family":"log"},"p":[1,1],"q":0})"),
              {2, 8}),
              16.0));
  CHECK(close(eval1(parse_aggregator(
                  R"({"kind":"aczelian","generator":{"family":"identity"}})"),
              {2, 3}),
              5.0));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"archimedean",
      "orientation":"conjunctive","interval":[0,1],
      "generator":{"family":"neg-complement","domain":{"lo":0,"hi":1}}})"),
              {0.7, 0.6}),
              0.3));
  // the documented serialization works without a domain restriction too
  CHECK(close(eval1(parse_aggregator(R"({"kind":"archimedean",
      "orientation":"conjunctive","interval":[0,1],
      "generator":{"family":"neg-complement"}})"),
              {0.7, 0.6}),
              0.3));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"normalized-form","form":"luka",
      "interval":[0,1],"generator":{"family":"identity","domain":{"lo":0,"hi":1}}})"),
              {0.9, 0.8, 0.7}),
              0.4));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"ordinal-sum",
      "orientation":"conjunctive","interval":[0,1],
      "components":[{"interval":[0,0.5],
        "generator":{"family":"neg-complement","domain":{"lo":0,"hi":1}}}]})"),
              {0.4, 0.3}),
              0.2));
  CHECK(eval1(parse_aggregator(R"({"kind":"alpha-beta","alpha":0.3,"beta":0.7})"),
              {0.5, 0.9, 0.2}) == 0.3);
  CHECK(eval1(parse_aggregator(R"({"kind":"median-assoc","alpha":0.5})"),
              {0.1, 0.9, 0.4}) == 0.5);
  CHECK(eval1(parse_aggregator(R"({"kind":"czogala-drewniak",
      "generator":{"family":"neg-complement"}})"),
              {0.2, 0.9}) == 0.9);
  CHECK(close(eval1(parse_aggregator(R"({"kind":"owa","weights":[0.5,0.3,0.2]})"),
              {3, 1, 2}),
              1.7, 1e-12));
  CHECK(close(eval1(parse_aggregator(R"({"kind":"wam","weights":[0.7,0.3]})"),
              {0, 10}),
              3.0));
  CHECK(eval1(parse_aggregator(R"({"kind":"pmax","weights":[1,0.4,0.7]})"),
              {0.2, 1, 0.5}) == 0.5);
  CHECK(eval1(parse_aggregator(R"({"kind":"opmax","weights":[1,0]})"),
              {0.3, 0.8}) == 0.3);
  CHECK(eval1(parse_aggregator(R"({"kind":"pmin","weights":[0,0.5]})"),
              {0.8, 0.2}) == std::min(std::max(0.0, 0.8), std::max(0.5, 0.2)));
  CHECK(eval1(parse_aggregator(R"({"kind":"opmin","weights":[0.5,0]})"),
              {0.8, 0.2}) == 0.5);
  CHECK(eval1(parse_aggregator(R"({"kind":"lattice-poly","n":3,
      "winning":[[1,2],[3]]})"),
              {0.4, 0.9, 0.1}) == 0.4);
  CHECK(eval1(parse_aggregator(R"({"kind":"order-statistic","k":2})"),
              {5, 1, 9}) == 5.0);

  // inline measure
  auto cho = parse_aggregator(R"({"kind":"choquet",
      "measure":{"n":2,"array":[0,0.3,0.6,1]}})");
  CHECK(cho.arity == 2);
  CHECK(close(eval1(cho, {1.0, 0.0}), 0.3));
}

TEST_CASE("spec validation fails fast") {
  CHECK_THROWS_AS(parse_aggregator("{"), AggError);
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"no-such"})"), AggError);
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"arithmetic","extra":1})"), AggError);
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"owa"})"), AggError);
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"owa","weights":[0.5,0.4]})"),
                  AggError);
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"root-power"})"), AggError);
  CHECK_THROWS_AS(
      parse_aggregator(R"({"kind":"quasi-arithmetic",
          "generator":{"family":"power","alpha":0}})"),
      AggError);
  CHECK_THROWS_AS(
      parse_aggregator(R"({"kind":"owa","weights":[0.5,0.5],"n":3})"), AggError);
  CHECK_THROWS_AS(
      parse_aggregator(R"({"kind":"lattice-poly","n":2,"winning":[[3]]})"),
      AggError);

  // declared n pins family kinds
  auto pinned = parse_aggregator(R"({"kind":"arithmetic","n":4})");
  CHECK(pinned.arity == 4);
}

TEST_CASE("measure file references resolve against the spec directory") {
  std::string dir = "/tmp/aggfn_test_specs";
  std::system(("mkdir -p " + dir).c_str());
  {
    std::ofstream mu(dir + "/mu.json");
    mu << write_measure_map(worked_measure());
  }
  auto agg = parse_aggregator(R"({"kind":"sugeno","measure":{"file":"mu.json"}})",
                              dir);
  CHECK(agg.arity == 3);
  CHECK(eval1(agg, {0.4, 0.9, 0.1}) == 0.4);
}

TEST_CASE("generator JSON accepts composition and domains") {
  auto agg = parse_aggregator(R"({"kind":"quasi-arithmetic",
      "generator":{"family":"composed",
        "outer":{"family":"affine","r":2,"s":1},
        "inner":{"family":"log"}}})");
  CHECK(close(eval1(agg, {2, 8}), 4.0));
  CHECK_THROWS_AS(parse_aggregator(R"({"kind":"quasi-arithmetic",
      "generator":{"family":"log","bogus":1}})"),
                  AggError);
}
