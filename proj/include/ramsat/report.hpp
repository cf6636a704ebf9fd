#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsat/constructions.hpp"
#include "ramsat/saturation.hpp"
#include "ramsat/solver.hpp"

namespace ramsat {

nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const SaturationReport& r);
nlohmann::json to_json(const CirculantSpec& spec);
/// Per-step wall times are included only when `timing` is set.
nlohmann::json to_json(const SearchResult& r, bool timing = true);

/// Envelope written by every solver-backed command. With `wall_time_ms` unset the dump is
/// a pure function of the inputs and a deterministic solver.
struct RunReport {
  std::vector<std::string> command;
  std::string config_digest;
  nlohmann::json results;
  std::optional<std::int64_t> wall_time_ms;
  std::string version = RAMSAT_VERSION;

  nlohmann::json to_json() const;
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const;
};

}  // namespace ramsat
