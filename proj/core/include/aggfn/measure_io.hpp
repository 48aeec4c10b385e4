#pragma once

#include <iosfwd>
#include <string>

#include "aggfn/measure.hpp"

namespace aggfn {

/// Measure file format (JSON): either the map form
///   {"n": 3, "values": {"": 0.0, "1": 0.2, "1,2": 0.5, ...}}
/// with keys as comma-separated ascending 1-based indices, or the array form
///   {"n": 3, "array": [v0, ..., v7]}
/// indexed by subset bitmask. Readers accept both; the writer emits the map
/// form unless asked otherwise.
FuzzyMeasure read_measure_json(const std::string& text);
FuzzyMeasure read_measure_file(const std::string& path);

std::string write_measure_map(const FuzzyMeasure& mu);
std::string write_measure_array(const FuzzyMeasure& mu);

}  // namespace aggfn
