#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "framekit/tolerance.hpp"

// Randomized property suite.  One registered property per supported statement
// of the theory; each property runs `trials` independent trials whose seeds
// derive deterministically from (master seed, property name, trial index), so
// every failure is replayable from its record alone.  Reports carry no
// timestamps or timings: same configuration => byte-identical serialization.

namespace framekit {

struct TrialContext {
  std::uint64_t seed = 0;       // per-trial seed (already derived)
  int index = 0;                // trial number within the property
  int dims_max = 6;             // inclusive cap for sampled dimensions
  ToleranceConfig tol;
};

// A trial either returns normally (pass) or throws TrialFailureError /
// any framekit exception (fail; message recorded).
struct TrialFailureError {
  std::string detail;           // observed vs expected
  std::string instance_json;    // serialized offending instance ("" if n/a)
};

struct PropertyDef {
  std::string name;             // suite identifier, e.g. "prop_2_8"
  std::string summary;          // one-line statement of what is checked
  int default_trials = 100;
  std::function<void(const TrialContext&)> body;
};

const std::vector<PropertyDef>& property_registry();

struct TrialFailure {
  std::string property;
  std::uint64_t seed = 0;
  int trial_index = -1;
  std::string detail;
  std::string instance_json;
};

struct PropertyReport {
  std::string name;
  std::string summary;
  int trials = 0;
  int passes = 0;
  std::vector<TrialFailure> failures;
};

struct SuiteConfig {
  std::uint64_t master_seed = 0x5eed5eed5eed5eedULL;
  int dims_max = 6;
  int trials_override = 0;              // 0 = per-property default
  std::vector<std::string> selected;    // empty = all registered
  ToleranceConfig tol;
};

struct SuiteReport {
  std::uint64_t master_seed = 0;
  int dims_max = 0;
  std::vector<PropertyReport> properties;
  int total_trials = 0;
  int total_failures = 0;
};

// Runs one registered property.  Throws UnknownProperty for unknown names.
PropertyReport run_property(const std::string& name, const SuiteConfig& cfg);

// Runs the selected (default: all) properties in registration order.
SuiteReport run_suite(const SuiteConfig& cfg);

// Canonical JSON serialization of a report (deterministic).
std::string serialize_report(const SuiteReport& report, bool pretty = false);

}  // namespace framekit
