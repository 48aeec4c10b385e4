#include "aggfn/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace aggfn {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_vector(const std::vector<double>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string PropertyReport::to_text() const {
  std::ostringstream os;
  os << "property: " << property << "\n";
  os << "verdict: " << (holds() ? "holds-on-samples" : "fails") << "\n";
  os << "samples: " << samples_used << "\n";
  os << "tolerance: " << format_double(tolerance) << "\n";
  os << "seed: " << seed << "\n";
  if (!note.empty()) os << "note: " << note << "\n";
  if (witness) {
    os << "witness:\n";
    for (size_t i = 0; i < witness->inputs.size(); ++i)
      os << "  input[" << i << "]: " << format_vector(witness->inputs[i]) << "\n";
    os << "  values: " << format_vector(witness->values) << "\n";
    os << "  violation: " << format_double(witness->violation) << "\n";
    if (!witness->note.empty()) os << "  note: " << witness->note << "\n";
  }
  return os.str();
}

std::string PropertyReport::to_json() const {
  nlohmann::json doc;
  doc["property"] = property;
  doc["verdict"] = holds() ? "holds-on-samples" : "fails";
  doc["samples"] = samples_used;
  doc["tolerance"] = tolerance;
  doc["seed"] = seed;
  if (!note.empty()) doc["note"] = note;
  if (witness) {
    nlohmann::json w;
    w["inputs"] = witness->inputs;
    w["values"] = witness->values;
    w["violation"] = witness->violation;
    if (!witness->note.empty()) w["note"] = witness->note;
    doc["witness"] = w;
  }
  return doc.dump(2);
}

}  // namespace aggfn
