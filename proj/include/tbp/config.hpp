#pragma once
#include <string>

#include "tbp/experiment.hpp"

namespace tbp {

struct LoadedConfig {
    ExperimentConfig experiment;
    bool seed_set = false; // whether the file itself pinned the seed
};

// Parses a JSON experiment description. Schema (top level):
//   setup      int 1..6            } exactly one of
//   means      [double], threshold } these two forms
//   budgets    [int]     required, each >= number of arms
//   policies   [object]  default [{"kind": "LSA"}]
//   runs       int       default 1000
//   seed       uint64    default 1
//   threads    int       default 1
//   alphas     [double]  only meaningful for the alpha sweep
// Policy objects take "kind" (LSA|APT|UCBE|OptKG|Uniform) plus the fields
// relevant to that kind (alpha / epsilon / exponent / prior_a, prior_b).
// Unknown keys anywhere are rejected with a diagnostic naming the key.
LoadedConfig parse_config(const std::string& json_text);

LoadedConfig load_config_file(const std::string& path);

// Compact one-token policy forms for command lines: "LSA", "LSA(1.35)",
// "APT(0.05)", "UCBE(0)", "OptKG(1,1)", "Uniform".
PolicyConfig parse_policy_spec(const std::string& spec);

} // namespace tbp
