// Command-line front end: evaluate aggregators over CSV data, run property
// checks, validate/classify/convert fuzzy measures, print invariant
// signatures.
//
// Exit codes: eval -> 0 ok, 2 parse error, 3 domain error;
//             check -> 0 all hold, 1 any fail, 2 config error;
//             measure validate -> 0 valid, 1 invalid.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aggfn/aggfn.hpp"

namespace {

using namespace aggfn;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dirname_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

// Strict, locale-independent CSV number parsing; scientific notation accepted.
bool parse_field(std::string_view field, double& out) {
  // trim spaces around the number
  size_t b = field.find_first_not_of(" \t");
  size_t e = field.find_last_not_of(" \t\r");
  if (b == std::string_view::npos) return false;
  field = field.substr(b, e - b + 1);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

int run_eval(const std::string& spec_path, const std::string& data_path,
             const std::string& out_path, bool header, bool values_only) {
  Aggregator agg = parse_aggregator(slurp(spec_path), dirname_of(spec_path));

  std::istream* in = &std::cin;
  std::ifstream file_in;
  if (!data_path.empty() && data_path != "-") {
    file_in.open(data_path);
    if (!file_in) raise(errc::io_error, "cannot open '" + data_path + "'");
    in = &file_in;
  }
  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!out_path.empty() && out_path != "-") {
    file_out.open(out_path);
    if (!file_out) raise(errc::io_error, "cannot open '" + out_path + "'");
    out = &file_out;
  }

  std::string line;
  long row = 0;
  bool first = true;
  std::vector<double> x;
  while (std::getline(*in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && header) {
      first = false;
      if (!values_only) *out << line << ",aggregate\n";
      continue;
    }
    first = false;
    if (line.empty()) continue;
    auto fields = split_csv(line);
    x.clear();
    for (size_t col = 0; col < fields.size(); ++col) {
      double v;
      if (!parse_field(fields[col], v) || !std::isfinite(v)) {
        std::cerr << "aggfn: row " << row << ", column " << col + 1
                  << ": cannot parse '" << std::string(fields[col]) << "'\n";
        return 2;
      }
      x.push_back(v);
    }
    double value;
    try {
      value = agg.fn(x);
    } catch (const AggError& e) {
      std::cerr << "aggfn: row " << row << ": " << e.what() << "\n";
      return 3;
    }
    if (values_only)
      *out << format_double(value) << "\n";
    else
      *out << line << "," << format_double(value) << "\n";
  }
  return 0;
}

int run_check(const std::string& spec_path, std::vector<std::string> properties,
              std::uint64_t seed, int samples, int n_max, double tolerance,
              const std::string& format) {
  Aggregator agg = parse_aggregator(slurp(spec_path), dirname_of(spec_path));
  CheckConfig config;
  config.sampler.seed = seed;
  config.sampler.samples = samples;
  config.n_max = n_max;
  config.tolerance = tolerance;
  if (properties.empty()) raise(errc::spec_error, "no properties requested");
  for (const auto& p : properties) {
    bool known = false;
    for (const auto& name : property_names()) known = known || name == p;
    if (!known) raise(errc::spec_error, "unknown property '" + p + "'");
  }

  bool all_hold = true;
  std::string joined;
  for (size_t i = 0; i < properties.size(); ++i) {
    PropertyReport report = run_named_check(agg, properties[i], config);
    all_hold = all_hold && report.holds();
    if (format == "json") {
      joined += (i ? ",\n" : "") + report.to_json();
    } else {
      if (i) joined += "\n";
      joined += report.to_text();
    }
  }
  if (format == "json")
    std::cout << "[\n" << joined << "\n]\n";
  else
    std::cout << joined;
  return all_hold ? 0 : 1;
}

WeightVector make_weights(const std::vector<double>& w, const std::string& type) {
  if (type == "additive" || type == "owa") return WeightVector::sum_one(w);
  if (type == "possibility") return WeightVector::max_one(w);
  if (type == "necessity") return WeightVector::min_zero(w);
  raise(errc::spec_error, "unknown weight type '" + type + "'");
}

int run_measure(const std::string& action, const std::string& file,
                const std::vector<double>& weights, const std::string& type,
                const std::string& out_path) {
  auto emit = [&](const std::string& text) {
    if (out_path.empty() || out_path == "-") {
      std::cout << text << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) raise(errc::io_error, "cannot open '" + out_path + "'");
      out << text << "\n";
    }
  };

  if (action == "validate") {
    try {
      FuzzyMeasure mu = read_measure_file(file);
      std::cout << "{\"valid\":true,\"n\":" << mu.n() << "}\n";
      return 0;
    } catch (const AggError& e) {
      std::cerr << "aggfn: " << e.what() << "\n";
      if (e.has_witness())
        std::cerr << "aggfn: witness subsets " << subset_to_string(e.witness_a())
                  << " and " << subset_to_string(e.witness_b()) << "\n";
      return 1;
    }
  }
  if (action == "classify") {
    MeasureFlags flags = classify_measure(read_measure_file(file));
    std::ostringstream os;
    os << "{\"additive\":" << (flags.additive ? "true" : "false")
       << ",\"possibility\":" << (flags.possibility ? "true" : "false")
       << ",\"necessity\":" << (flags.necessity ? "true" : "false")
       << ",\"cardinality_based\":" << (flags.cardinality_based ? "true" : "false")
       << ",\"binary\":" << (flags.binary ? "true" : "false") << "}";
    emit(os.str());
    return 0;
  }
  if (action == "from-weights") {
    WeightVector w = make_weights(weights, type.empty() ? "additive" : type);
    FuzzyMeasure mu = w.normalization() == WeightNorm::sum_one
                          ? FuzzyMeasure::additive(w)
                          : w.normalization() == WeightNorm::max_one
                                ? FuzzyMeasure::possibility(w)
                                : FuzzyMeasure::necessity(w);
    emit(write_measure_map(mu));
    return 0;
  }
  if (action == "from-owa") {
    FuzzyMeasure mu = owa_to_measure(WeightVector::sum_one(weights));
    emit(write_measure_map(mu));
    return 0;
  }
  if (action == "to-owa") {
    WeightVector w = measure_to_owa(read_measure_file(file));
    std::string text = "[";
    for (int i = 0; i < w.size(); ++i)
      text += (i ? "," : "") + format_double(w[i]);
    emit(text + "]");
    return 0;
  }
  raise(errc::spec_error, "unknown measure action '" + action + "'");
}

int run_convert(const std::string& file, const std::string& to,
                const std::string& out_path) {
  FuzzyMeasure mu = read_measure_file(file);
  std::string text = to == "array" ? write_measure_array(mu) : write_measure_map(mu);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) raise(errc::io_error, "cannot open '" + out_path + "'");
    out << text << "\n";
  }
  return 0;
}

int run_signature(const std::vector<double>& x, bool apply_monotone) {
  std::cout << to_string(invariant_signature(x)) << "\n";
  if (apply_monotone) {
    // demo transform: strictly increasing on all of R
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] * x[i] * x[i] + 2.0 * x[i];
    std::string line;
    for (size_t i = 0; i < y.size(); ++i)
      line += (i ? " " : "") + format_double(y[i]);
    std::cout << "transformed: " << line << "\n";
    std::cout << to_string(invariant_signature(y)) << "\n";
  }
  return 0;
}

int run_list() {
  std::cout << "aggregator kinds:\n";
  for (const auto& k : aggregator_kinds()) std::cout << "  " << k << "\n";
  std::cout << "properties:\n";
  for (const auto& p : property_names()) std::cout << "  " << p << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aggregation-function toolkit"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "aggregate CSV rows");
  std::string eval_spec, eval_data, eval_out;
  bool eval_header = false, eval_values_only = false;
  eval_cmd->add_option("spec", eval_spec, "aggregator spec JSON file")->required();
  eval_cmd->add_option("data", eval_data, "CSV input (default stdin)");
  eval_cmd->add_option("-o,--output", eval_out, "output file (default stdout)");
  eval_cmd->add_flag("--header", eval_header, "first row is a header");
  eval_cmd->add_flag("--values-only", eval_values_only,
                     "emit only the aggregated column");

  // check
  auto* check_cmd = app.add_subcommand("check", "run property checks");
  std::string check_spec, check_format = "text";
  std::vector<std::string> check_props;
  std::uint64_t seed = 0;
  int samples = 1000, n_max = 5;
  double tolerance = -1.0;
  check_cmd->add_option("spec", check_spec, "aggregator spec JSON file")->required();
  check_cmd->add_option("properties", check_props, "property names")->required();
  check_cmd->add_option("--seed", seed, "sampler seed");
  check_cmd->add_option("--samples", samples, "samples per law");
  check_cmd->add_option("--n-max", n_max, "bound for sequence laws");
  check_cmd->add_option("--tolerance", tolerance, "override the per-law tolerance");
  check_cmd->add_option("--format", check_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "fuzzy measure utilities");
  std::string m_action, m_file, m_type, m_out;
  std::vector<double> m_weights;
  measure_cmd
      ->add_option("action", m_action,
                   "validate | classify | from-weights | from-owa | to-owa")
      ->required()
      ->check(CLI::IsMember({"validate", "classify", "from-weights", "from-owa",
                             "to-owa"}));
  measure_cmd->add_option("file", m_file, "measure JSON file");
  measure_cmd->add_option("--weights", m_weights, "weights for from-weights/from-owa");
  measure_cmd->add_option("--type", m_type, "additive | possibility | necessity");
  measure_cmd->add_option("-o,--output", m_out, "output file (default stdout)");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "rewrite a measure file");
  std::string c_file, c_to = "map", c_out;
  convert_cmd->add_option("file", c_file, "measure JSON file")->required();
  convert_cmd->add_option("--to", c_to, "map or array")
      ->check(CLI::IsMember({"map", "array"}));
  convert_cmd->add_option("-o,--output", c_out, "output file (default stdout)");

  // signature
  auto* sig_cmd = app.add_subcommand("signature", "invariant-set signature");
  std::vector<double> sig_x;
  bool sig_apply = false;
  sig_cmd->add_option("components", sig_x, "vector components")->required();
  sig_cmd->add_flag("--apply-monotone", sig_apply,
                    "also show the signature after a strictly increasing demo map");

  // list
  app.add_subcommand("list", "catalog of kinds and properties");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed())
      return run_eval(eval_spec, eval_data, eval_out, eval_header, eval_values_only);
    if (check_cmd->parsed())
      return run_check(check_spec, check_props, seed, samples, n_max, tolerance,
                       check_format);
    if (measure_cmd->parsed())
      return run_measure(m_action, m_file, m_weights, m_type, m_out);
    if (convert_cmd->parsed()) return run_convert(c_file, c_to, c_out);
    if (sig_cmd->parsed()) return run_signature(sig_x, sig_apply);
    return run_list();
  } catch (const AggError& e) {
    std::cerr << "aggfn: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "aggfn: " << e.what() << "\n";
    return 2;
  }
}
