#include "wavemix/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"

namespace wavemix {

double peak_frequency(const SystemParams& params, const DriveConfig& drive, int p, Side side) {
  const double off = (2 * p + 1) * drive.delta;
  return side == Side::Right ? params.omega01 + off : params.omega01 - off;
}

void sort_by_frequency(PeakSpectrum& spec) {
  std::stable_sort(spec.records.begin(), spec.records.end(),
                   [](const PeakRecord& a, const PeakRecord& b) { return a.frequency < b.frequency; });
}

namespace {

const std::set<std::string> kConfigKeys = {"omega01", "gamma", "v", "rabi_a", "rabi_b", "delta"};

double require_key(const ParamMap& raw, const std::string& key) {
  auto it = raw.find(key);
  if (it == raw.end()) throw ValidationError("missing required parameter '" + key + "'");
  return it->second;
}

}  // namespace

std::pair<SystemParams, DriveConfig> validate_config(const ParamMap& raw) {
  for (const auto& [key, value] : raw) {
    if (!kConfigKeys.count(key)) throw ValidationError("unknown parameter '" + key + "'");
    if (!std::isfinite(value)) throw ValidationError("parameter '" + key + "' is not finite");
  }

  SystemParams params;
  params.omega01 = require_key(raw, "omega01");
  params.gamma = require_key(raw, "gamma");
  params.v = raw.count("v") ? raw.at("v") : 1.0;

  DriveConfig drive;
  drive.rabi_a = require_key(raw, "rabi_a");
  drive.rabi_b = require_key(raw, "rabi_b");
  drive.delta = require_key(raw, "delta");

  if (!(params.gamma > 0)) throw ValidationError("gamma must be positive");
  if (!(params.omega01 > 0)) throw ValidationError("omega01 must be positive");
  if (!(params.v > 0)) throw ValidationError("v must be positive");
  if (!(drive.delta > 0)) throw ValidationError("delta must be positive");
  if (drive.rabi_a < 0) throw ValidationError("rabi_a must be non-negative");
  if (drive.rabi_b < 0) throw ValidationError("rabi_b must be non-negative");

  drive.quasistationary_strained = drive.delta / params.gamma > 0.1;
  return {params, drive};
}

ParamMap parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config JSON must be an object");
  ParamMap out;
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.count(key)) throw ValidationError("unknown parameter '" + key + "'");
    if (!value.is_number()) throw ValidationError("parameter '" + key + "' must be a number");
    out[key] = value.get<double>();
  }
  return out;
}

std::string config_to_json(const SystemParams& params, const DriveConfig& drive) {
  nlohmann::json j;
  j["omega01"] = params.omega01;
  j["gamma"] = params.gamma;
  j["v"] = params.v;
  j["rabi_a"] = drive.rabi_a;
  j["rabi_b"] = drive.rabi_b;
  j["delta"] = drive.delta;
  return j.dump(2) + "\n";
}

}  // namespace wavemix
