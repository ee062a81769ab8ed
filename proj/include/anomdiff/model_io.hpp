#pragma once

#include "anomdiff/anomalous_models.hpp"
#include "anomdiff/calibration.hpp"

#include <string>

namespace anomdiff {

// JSON shapes (field names are part of the CLI contract):
//   Levy driver:    {"variant": "vg"|"nig"|"bm"|"cgmy", "params": {...}, "drift": b}
//   Anomalous:      {"kind": "sl"|"drd"|"levy", "beta": x, "levy": {...}}
//   Scenario spec:  {"base": <levy json>, "scenario": "baseline"|"shift_12m"|"shift_18m"}
// Parse errors throw std::invalid_argument naming the offending field.

std::string levy_to_json(const LevyModel& model);
LevyModel levy_from_json(const std::string& text);

std::string anomalous_to_json(const AnomalousModel& model);
AnomalousModel anomalous_from_json(const std::string& text);

std::string calibration_result_to_json(const CalibrationResult& result);

struct ScenarioSpec {
    LevyModel base;
    Scenario scenario;
};

ScenarioSpec scenario_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// 17-significant-digit decimal form (value-preserving round trip).
std::string format_full(double value);

} // namespace anomdiff
