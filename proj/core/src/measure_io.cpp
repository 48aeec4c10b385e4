#include "aggfn/measure_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aggfn/errors.hpp"

namespace aggfn {

namespace {

using nlohmann::json;

std::uint32_t parse_subset_key(const std::string& key, int n) {
  if (key.empty()) return 0;
  std::uint32_t mask = 0;
  int prev = 0;
  std::istringstream in(key);
  std::string token;
  while (std::getline(in, token, ',')) {
    int idx;
    try {
      size_t pos = 0;
      idx = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      raise(errc::spec_error, "bad subset key '" + key + "'");
    }
    if (idx < 1 || idx > n)
      raise(errc::spec_error, "element " + std::to_string(idx) +
                                  " outside 1.." + std::to_string(n));
    if (idx <= prev)
      raise(errc::spec_error, "subset key '" + key +
                                  "' must list ascending indices");
    prev = idx;
    mask |= 1u << (idx - 1);
  }
  return mask;
}

std::string subset_key(std::uint32_t mask) {
  std::string key;
  for (int i = 0; mask >> i; ++i) {
    if (mask & (1u << i)) {
      if (!key.empty()) key += ",";
      key += std::to_string(i + 1);
    }
  }
  return key;
}

}  // namespace

FuzzyMeasure read_measure_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(errc::spec_error, std::string("measure JSON: ") + e.what());
  }
  if (!doc.is_object()) raise(errc::spec_error, "measure document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    raise(errc::spec_error, "measure needs an integer field 'n'");
  int n = doc["n"].get<int>();
  if (n < 1 || n > 20) raise(errc::spec_error, "measure needs 1 <= n <= 20");

  bool has_map = doc.contains("values");
  bool has_array = doc.contains("array");
  if (has_map == has_array)
    raise(errc::spec_error, "measure needs exactly one of 'values' or 'array'");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "values" && key != "array")
      raise(errc::spec_error, "unknown measure key '" + key + "'");
  }

  std::vector<double> values(size_t{1} << n, 0.0);
  if (has_array) {
    const json& arr = doc["array"];
    if (!arr.is_array() || arr.size() != values.size())
      raise(errc::spec_error,
            "'array' must hold exactly 2^n = " + std::to_string(values.size()) +
                " numbers");
    for (size_t i = 0; i < values.size(); ++i) {
      if (!arr[i].is_number()) raise(errc::spec_error, "'array' entries must be numbers");
      values[i] = arr[i].get<double>();
    }
  } else {
    const json& map = doc["values"];
    if (!map.is_object()) raise(errc::spec_error, "'values' must be an object");
    std::vector<char> seen(values.size(), 0);
    for (const auto& [key, value] : map.items()) {
      if (!value.is_number())
        raise(errc::spec_error, "value of subset '" + key + "' must be a number");
      std::uint32_t mask = parse_subset_key(key, n);
      if (seen[mask]) raise(errc::spec_error, "duplicate subset '" + key + "'");
      seen[mask] = 1;
      values[mask] = value.get<double>();
    }
    for (size_t mask = 0; mask < seen.size(); ++mask)
      if (!seen[mask])
        raise(errc::spec_error, "missing subset " +
                                    subset_to_string(static_cast<std::uint32_t>(mask)));
  }
  return FuzzyMeasure::validate(std::move(values));
}

FuzzyMeasure read_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open measure file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_measure_json(buf.str());
}

std::string write_measure_map(const FuzzyMeasure& mu) {
  json map = json::object();
  for (std::uint32_t mask = 0; mask <= mu.full_mask(); ++mask)
    map[subset_key(mask)] = mu[mask];
  json doc;
  doc["n"] = mu.n();
  doc["values"] = map;
  return doc.dump(2);
}

std::string write_measure_array(const FuzzyMeasure& mu) {
  json doc;
  doc["n"] = mu.n();
  doc["array"] = std::vector<double>(mu.values().begin(), mu.values().end());
  return doc.dump(2);
}

}  // namespace aggfn
