#include "hc/json_io.hpp"

#include "hc/graph6.hpp"

namespace hc {

namespace {

Json rat_array(const std::vector<Rat>& xs) {
  Json arr = Json::array();
  for (const Rat& x : xs) arr.push_back(rat_str(x));
  return arr;
}

const char* row_kind_name(RowKind k) {
  switch (k) {
    case RowKind::Eq: return "eq";
    case RowKind::Ge: return "ge";
    case RowKind::Le: return "le";
  }
  return "?";
}

Json pairs_json(const std::vector<SlacknessPair>& pairs) {
  Json arr = Json::array();
  for (const auto& p : pairs)
    arr.push_back({{"pair", p.label},
                   {"value", rat_str(p.value)},
                   {"slack", rat_str(p.slack)},
                   {"tight", p.tight},
                   {"violated", p.violated}});
  return arr;
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_str(c));
  return {{"coeffs", coeffs}};
}

Json to_json(const OccupancyReport& rep) {
  return {{"lambda", rat_str(rep.lambda)},
          {"alpha", rat_str(rep.alpha)},
          {"p", rat_array(rep.p)},
          {"q", rat_array(rep.q)}};
}

Json to_json(const YDistribution& dist) {
  return {{"d", dist.d},
          {"lambda", rat_str(dist.lambda)},
          {"y", rat_array(dist.y)},
          {"mean", rat_str(dist.mean())}};
}

Json to_json(const LocalGraphDistribution& dist) {
  Json entries = Json::array();
  for (const auto& e : dist.entries)
    entries.push_back({{"graph6", write_graph6(e.rep)},
                       {"n", e.rep.n()},
                       {"prob", rat_str(e.prob)}});
  return {{"d", dist.d}, {"lambda", rat_str(dist.lambda)}, {"entries", entries}};
}

Json to_json(const LpProblem& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows)
    rows.push_back({{"label", row.label},
                    {"kind", row_kind_name(row.kind)},
                    {"coeffs", rat_array(row.coeffs)},
                    {"rhs", rat_str(row.rhs)}});
  Json nonneg = Json::array();
  for (bool b : p.var_nonneg) nonneg.push_back(b);
  return {{"sense", p.sense == Sense::Min ? "min" : "max"},
          {"variables", p.var_labels},
          {"nonneg", nonneg},
          {"objective", rat_array(p.objective)},
          {"rows", rows}};
}

Json to_json(const LpSolution& s) {
  const char* status = s.status == LpStatus::Optimal     ? "optimal"
                       : s.status == LpStatus::Infeasible ? "infeasible"
                                                          : "unbounded";
  Json out{{"status", status}};
  if (s.status == LpStatus::Optimal) {
    out["objective"] = rat_str(s.objective);
    out["primal"] = rat_array(s.primal);
    out["dual"] = rat_array(s.dual);
    out["basis"] = s.basis;
  }
  return out;
}

Json to_json(const SlacknessReport& rep) {
  return {{"primal_feasible", rep.primal_feasible},
          {"dual_feasible", rep.dual_feasible},
          {"primal_objective", rat_str(rep.primal_objective)},
          {"dual_objective", rat_str(rep.dual_objective)},
          {"violations", rep.violations()},
          {"variable_pairs", pairs_json(rep.variable_pairs)},
          {"row_pairs", pairs_json(rep.row_pairs)}};
}

Json to_json(const TfBound& b) {
  return {{"model", "tfree"},
          {"d", b.d},
          {"lambda", rat_str(b.lambda)},
          {"branch", b.branch},
          {"y", {{"y0", rat_str(b.y0)},
                 {"yi", rat_str(b.yi)},
                 {"yi1", rat_str(b.yi1)}}},
          {"dual", {{"S", rat_str(b.dual_s)},
                    {"M", rat_str(b.dual_m)},
                    {"A", rat_str(b.dual_a)}}},
          {"alpha_bound", rat_str(b.y0)},
          {"objective", rat_str(b.objective())}};
}

Json to_json(const CubicBound& b) {
  return {{"model", "cubic"},
          {"lambda", rat_str(b.lambda)},
          {"Lambda", rat_str(b.big_lambda)},
          {"y", rat_array({b.y0, b.y1, b.y2, b.y3})},
          {"dual", {{"S", rat_str(b.dual_s)},
                    {"M", rat_str(b.dual_m)},
                    {"A", rat_str(b.dual_a)},
                    {"B", rat_str(b.dual_b)}}},
          {"alpha_bound", rat_str(b.y0)},
          {"objective", rat_str(b.objective())}};
}

Json to_json(const ScanReport& rep) {
  Json cells = Json::array();
  for (const auto& c : rep.cells)
    cells.push_back({{"graph_index", c.graph_index},
                     {"graph6", c.graph6},
                     {"n", c.n},
                     {"d", c.d},
                     {"lambda", rat_str(c.lambda)},
                     {"check", scan_check_name(c.check)},
                     {"pass", c.pass},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs}});
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"graph_index", v.graph_index}, {"message", v.message}});
  return {{"cells", cells},
          {"violations", violations},
          {"all_pass", rep.all_pass()}};
}

std::string scan_csv(const ScanReport& rep) {
  std::string out = "graph_index,graph6,n,d,lambda,check,pass,lhs,rhs\n";
  for (const auto& c : rep.cells) {
    out += std::to_string(c.graph_index) + ',' + c.graph6 + ',' +
           std::to_string(c.n) + ',' + std::to_string(c.d) + ',' +
           rat_str(c.lambda) + ',' + scan_check_name(c.check) + ',' +
           (c.pass ? "true" : "false") + ',' + c.lhs + ',' + c.rhs + '\n';
  }
  return out;
}

}  // namespace hc
