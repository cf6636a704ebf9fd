#include "ramsat/report.hpp"

namespace ramsat {

nlohmann::json to_json(const Witness& w) {
  nlohmann::json j = {{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
  if (w.pair) j["pair"] = {w.pair->first, w.pair->second};
  return j;
}

nlohmann::json to_json(const SaturationReport& r) {
  nlohmann::json j = {{"verdict", to_string(r.verdict)}};
  j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CirculantSpec& spec) {
  return {{"n", spec.n}, {"distances", spec.distances}, {"text", spec.to_string()}};
}

nlohmann::json to_json(const SearchResult& r, bool timing) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : r.steps) {
    nlohmann::json j = {{"n", st.n},
                        {"status", to_string(st.status)},
                        {"stdout_sha256", st.stdout_digest},
                        {"dimacs_sha256", st.dimacs_digest}};
    if (timing) j["wall_time_ms"] = st.wall_time_ms;
    if (st.graph6) j["graph6"] = *st.graph6;
    steps.push_back(std::move(j));
  }
  nlohmann::json j = {{"steps", steps}, {"conditional", r.conditional}};
  j["n_min"] = r.n_min ? nlohmann::json(*r.n_min) : nlohmann::json(nullptr);
  j["graph6"] = r.graph ? nlohmann::json(write_graph6(*r.graph)) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j = {{"command", command}, {"config_digest", config_digest}, {"results", results}, {"version", version}};
  if (wall_time_ms) j["wall_time_ms"] = *wall_time_ms;
  return j;
}

std::string RunReport::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace ramsat
