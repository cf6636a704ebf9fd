#include "ramsat/poset.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "ramsat/canonical.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/saturation.hpp"
#include "ramsat/union_find.hpp"

namespace ramsat {

std::vector<Graph> load_good_classes(std::istream& graph6_lines, int s, int t) {
  check_regime(s, t);
  std::map<std::vector<std::uint8_t>, Graph> classes;
  std::string line;
  std::size_t line_no = 0;
  int n = -1;
  while (std::getline(graph6_lines, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
    if (n < 0) n = g.order();
    if (g.order() != n)
      throw ParseError(where + "order " + std::to_string(g.order()) + " differs from earlier order " + std::to_string(n));
    const GoodnessReport good = is_good(g, s, t);
    if (!good.good) {
      std::string vs;
      for (int v : good.witness->vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v);
      throw ParseError(where + "graph is not R(" + std::to_string(s) + "," + std::to_string(t) + ")-good: " +
                       std::string(to_string(good.witness->kind)) + " {" + vs + "}");
    }
    CanonicalLabeling c = canonical_form(g);
    if (!classes.contains(c.canon_bytes)) classes.emplace(std::move(c.canon_bytes), g.relabeled(c.perm));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [bytes, g] : classes) out.push_back(std::move(g));
  return out;
}

ComponentSummary build_poset(const std::vector<Graph>& classes, int s, int t, const PosetOptions& opts) {
  check_regime(s, t);
  ComponentSummary sum;
  sum.s = s;
  sum.t = t;
  sum.class_count = classes.size();
  if (classes.empty()) return sum;
  sum.n = classes.front().order();
  if (sum.n < 3) throw InvalidArgument("poset analysis requires n >= 3");

  std::vector<std::vector<std::uint8_t>> canon(classes.size());
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].order() != sum.n) throw InvalidArgument("classes have mixed orders");
    if (!is_good(classes[i], s, t).good)
      throw InvalidArgument("class " + std::to_string(i) + " (" + write_graph6(classes[i]) + ") is not good");
    canon[i] = canonical_form(classes[i]).canon_bytes;
    if (!index.emplace(canon[i], i).second)
      throw InvalidArgument("duplicate isomorphism class at index " + std::to_string(i));
  }

  // Upward covers per class; computed independently, merged in class order.
  const long count = static_cast<long>(classes.size());
  std::vector<std::vector<std::size_t>> up(classes.size());
  std::vector<std::string> errors(classes.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
  for (long li = 0; li < count; ++li) {
    const auto i = static_cast<std::size_t>(li);
    try {
      for (auto [u, v] : classes[i].non_edges()) {
        const Graph h = classes[i].with_edge(u, v);
        if (!is_good(h, s, t).good) continue;
        const auto it = index.find(canonical_form(h).canon_bytes);
        if (it == index.end()) {
          errors[i] = "adding edge (" + std::to_string(u) + "," + std::to_string(v) + ") to class " + std::to_string(i) +
                      " yields a good graph " + write_graph6(h) + " absent from the input";
          break;
        }
        up[i].push_back(it->second);
      }
      std::ranges::sort(up[i]);
      up[i].erase(std::unique(up[i].begin(), up[i].end()), up[i].end());
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw InvalidArgument("incomplete class list: " + e);

  UnionFind uf(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j : up[i]) {
      sum.covers.emplace_back(i, j);
      uf.unite(i, j);
    }
  sum.cover_edge_count = sum.covers.size();

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < classes.size(); ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [root, members] : by_root) {
    std::ranges::sort(members, [&](std::size_t a, std::size_t b) { return canon[a] < canon[b]; });
    groups.push_back(std::move(members));
  }
  std::ranges::sort(groups, [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return canon[a.front()] < canon[b.front()];
  });

  std::vector<std::pair<std::vector<std::uint8_t>, std::string>> singles;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    PosetComponent comp;
    comp.id = static_cast<int>(c);
    comp.members = groups[c];
    std::map<std::size_t, int> hist;
    for (std::size_t m : comp.members) ++hist[classes[m].edge_count()];
    comp.edge_count_histogram.assign(hist.begin(), hist.end());
    sum.component_sizes.push_back(comp.members.size());
    sum.components.push_back(std::move(comp));
  }

  // Singleton components are exactly the doubly saturated classes.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool singleton = uf.component_size(i) == 1;
    const bool ds = is_doubly_saturated(classes[i], s, t).doubly_saturated();
    if (singleton != ds)
      throw std::logic_error("class " + write_graph6(classes[i]) + (singleton ? " is a singleton component but not" : " is doubly saturated but not a singleton") +
                             " (characterisation violated)");
    if (singleton) singles.emplace_back(canon[i], write_graph6(classes[i]));
  }
  std::ranges::sort(singles);
  for (auto& [bytes, g6] : singles) sum.singleton_classes.push_back(std::move(g6));
  return sum;
}

nlohmann::json ComponentSummary::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json hist = nlohmann::json::array();
    for (auto [edges, k] : c.edge_count_histogram) hist.push_back({edges, k});
    comps.push_back({{"id", c.id}, {"size", c.members.size()}, {"edge_count_histogram", hist}});
  }
  return {{"n", n},
          {"s", s},
          {"t", t},
          {"class_count", class_count},
          {"component_count", components.size()},
          {"component_sizes", component_sizes},
          {"singleton_classes", singleton_classes},
          {"cover_edge_count", cover_edge_count},
          {"components", comps}};
}

std::string component_plot_csv(const ComponentSummary& summary) {
  std::ostringstream os;
  os << "component_id,size,edge_count_histogram\n";
  for (const auto& c : summary.components) {
    os << c.id << ',' << c.members.size() << ',';
    for (std::size_t i = 0; i < c.edge_count_histogram.size(); ++i)
      os << (i ? ";" : "") << c.edge_count_histogram[i].first << ':' << c.edge_count_histogram[i].second;
    os << '\n';
  }
  return os.str();
}

}  // namespace ramsat
