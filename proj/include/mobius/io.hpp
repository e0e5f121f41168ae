#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mobius/knapsack.hpp"
#include "mobius/poset.hpp"
#include "mobius/theorems.hpp"

namespace mobius {

using ordered_json = nlohmann::ordered_json;

/// Graphviz source for the Hasse diagram, drawn bottom-up.  Elements of a
/// graded poset are laid out one rank per layer; members of `shaded` are
/// filled gray.
inline std::string to_dot(const FinitePoset& poset,
                          const std::set<FinitePoset::Index>& shaded = {}) {
  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (FinitePoset::Index x = 0; x < poset.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=\"" + poset.label(x) + "\"";
    if (shaded.count(x)) out += ", style=filled, fillcolor=lightgray";
    out += "];\n";
  }
  if (poset.is_graded()) {
    std::map<int, std::vector<FinitePoset::Index>> layers;
    for (FinitePoset::Index x = 0; x < poset.size(); ++x)
      layers[poset.rank(x)].push_back(x);
    for (const auto& [r, layer] : layers) {
      out += "  { rank=same;";
      for (FinitePoset::Index x : layer) out += " n" + std::to_string(x) + ";";
      out += " }\n";
    }
  }
  for (const auto& [lo, hi] : poset.covers())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

inline ordered_json to_json(const FinitePoset& poset) {
  ordered_json j;
  j["elements"] = ordered_json::array();
  for (FinitePoset::Index x = 0; x < poset.size(); ++x)
    j["elements"].push_back(poset.label(x));
  j["covers"] = ordered_json::array();
  for (const auto& [lo, hi] : poset.covers())
    j["covers"].push_back(ordered_json::array({lo, hi}));
  return j;
}

inline ordered_json certificate_json(const KnapsackCertificate& cert) {
  ordered_json j;
  j["partition"] = cert.lambda;
  j["distinct_sums"] = cert.distinct_sums;
  j["capacity"] = cert.capacity;
  j["is_knapsack"] = cert.knapsack;
  return j;
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string census_csv(const std::vector<KnapsackCertificate>& rows) {
  std::string out = "partition,distinct_sums,capacity,is_knapsack\n";
  for (const auto& cert : rows) {
    out += "\"" + join_ints(cert.lambda) + "\"," +
           std::to_string(cert.distinct_sums) + "," +
           std::to_string(cert.capacity) + "," +
           (cert.knapsack ? "true" : "false") + "\n";
  }
  return out;
}

inline ordered_json census_json(const std::vector<KnapsackCertificate>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& cert : rows) j.push_back(certificate_json(cert));
  return j;
}

inline ordered_json vset_json(const VSet& v) {
  ordered_json j;
  j["lambda"] = v.lambda;
  j["m"] = v.m;
  j["count"] = v.members.size();
  j["members"] = ordered_json::array();
  for (const auto& c : v.members) j["members"].push_back(c.str());
  return j;
}

inline ordered_json report_json(const MobiusReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["generators"] = ordered_json::array();
  for (const auto& g : report.generators) j["generators"].push_back(g.str());
  auto put = [&](const char* key, const std::optional<std::int64_t>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  put("bruteforce", report.bruteforce);
  put("theorem1", report.theorem1);
  put("knapsack", report.knapsack);
  j["agree"] = report.agree;
  return j;
}

}  // namespace mobius
