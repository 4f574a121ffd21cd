#include "zdg/report.hpp"

#include <cstdio>

namespace zdg {

std::string decimal(const BigInt& x) { return x.str(); }

std::string format_sig(double v, int digits) {
  if (v == 0.0) v = 0.0;  // folds -0 into 0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json partition_json(const ZeroDivisorGraph& g, const ClassPartition& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json members = Json::array();
    for (auto v : c.members) members.push_back(g.ring.label(g.vertices[v]));
    classes.push_back({{"representative", g.ring.label(g.vertices[c.representative()])},
                       {"size", c.size()},
                       {"kind", to_string(c.kind)},
                       {"members", std::move(members)}});
  }
  return {{"ring", g.ring.descriptor().to_string()},
          {"relation", to_string(p.relation)},
          {"vertex_count", p.vertex_count},
          {"class_count", p.classes.size()},
          {"classes", std::move(classes)}};
}

Json graph_json(const ZeroDivisorGraph& g) {
  Json vertices = Json::array();
  for (auto v : g.vertices) vertices.push_back(g.ring.label(v));
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.order(); ++i)
    g.adjacency.for_each_in_row(i, [&](std::size_t j) {
      if (i < j) edges.push_back({i, j});
    });
  return {{"ring", g.ring.descriptor().to_string()},
          {"vertex_count", g.order()},
          {"edge_count", g.edge_count()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

Json spectrum_json(const SpectrumReport& r) {
  Json clusters = Json::array();
  for (const auto& c : r.spectrum.clusters()) clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  Json verification = nullptr;
  if (r.verification) {
    verification = {{"matched", r.verification->matched}, {"max_deviation", r.verification->max_deviation}};
    if (r.verification->length_mismatch) verification["length_mismatch"] = true;
  }
  return {{"ring", r.ring},
          {"relation", to_string(r.relation)},
          {"method", r.method},
          {"flavor", to_string(r.flavor)},
          {"values", r.spectrum.values},
          {"clusters", std::move(clusters)},
          {"verification", std::move(verification)}};
}

Json count_json(const std::string& formula, Json inputs, const BigInt& value) {
  return count_json(formula, std::move(inputs), Json(decimal(value)));
}

Json count_json(const std::string& formula, Json inputs, Json value) {
  return {{"formula", formula}, {"inputs", std::move(inputs)}, {"value", std::move(value)}};
}

Json zn_profile_json(const ZnProfile& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json adjacent = Json::array();
    for (auto j : c.adjacent) adjacent.push_back(p.classes[j].d);
    classes.push_back({{"d", c.d},
                       {"size", c.size},
                       {"kind", to_string(c.kind)},
                       {"neighbor_sum", c.neighbor_sum},
                       {"adjacent_divisors", std::move(adjacent)}});
  }
  return {{"class_count", p.classes.size()}, {"complete_count", p.complete_count}, {"classes", std::move(classes)}};
}

Json boolean_skeleton_json(const BooleanSkeleton& s) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < s.supports.size(); ++i) {
    Json support = Json::array();
    for (unsigned k = 0; k < s.t; ++k)
      if (s.supports[i] >> k & 1U) support.push_back(k + 1);
    classes.push_back({{"support", std::move(support)},
                       {"size", decimal(s.class_sizes[i])},
                       {"class_degree", s.class_degrees[i]},
                       {"vertex_degree", decimal(s.vertex_degrees[i])}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : s.edges) edges.push_back({a, b});
  return {{"classes", std::move(classes)}, {"edges", std::move(edges)}};
}

Json agreement_json(const AgreementReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ring", r.ring}, {"all_passed", r.all_passed()}, {"checks", std::move(checks)}};
}

Json lift_json(const LiftResult& r, std::size_t row_one_based, std::size_t m, double lambda) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.duplicated.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.duplicated.cols; ++j) row.push_back(r.duplicated(i, j));
    rows.push_back(std::move(row));
  }
  return {{"row", row_one_based},
          {"m", m},
          {"lambda", lambda},
          {"status", to_string(r.status)},
          {"mu", r.mu},
          {"rayleigh", r.rayleigh},
          {"residual", r.residual},
          {"w", r.w},
          {"duplicated", std::move(rows)},
          {"message", r.message}};
}

Json pairing_json(const PairingReport& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back({a, b});
  return {{"zero_count", r.zero_count}, {"pairs", std::move(pairs)}, {"unmatched", r.unmatched}, {"perfect", r.perfect}};
}

}  // namespace zdg
