#include "hc/scan.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "hc/graph6.hpp"
#include "hc/hardcore.hpp"

namespace hc {

std::string scan_check_name(ScanCheck check) {
  switch (check) {
    case ScanCheck::Main: return "main";
    case ScanCheck::Djpr: return "djpr";
    case ScanCheck::TfBound: return "tf-bound";
    case ScanCheck::CubicBound: return "cubic-bound";
    case ScanCheck::Y3Bound: return "y3-bound";
    case ScanCheck::Conjecture: return "conjecture";
    case ScanCheck::EqualityStructure: return "equality-structure";
  }
  throw std::invalid_argument("unknown scan check");
}

ScanCheck scan_check_from_name(const std::string& name) {
  for (ScanCheck c : {ScanCheck::Main, ScanCheck::Djpr, ScanCheck::TfBound,
                      ScanCheck::CubicBound, ScanCheck::Y3Bound,
                      ScanCheck::Conjecture, ScanCheck::EqualityStructure})
    if (scan_check_name(c) == name) return c;
  throw std::invalid_argument("unknown scan check tag: " + name);
}

bool ScanReport::all_pass() const {
  if (!violations.empty()) return false;
  for (const auto& cell : cells)
    if (!cell.pass) return false;
  return true;
}

namespace {

struct LambdaRefs {
  Rat cubic_y0;
  Rat big_lambda;
  double conjecture = 0.0;
  std::map<int, Rat> clique;    // by degree
  std::map<int, Rat> biclique;  // by degree
  std::map<int, Rat> tf_y0;     // by degree
};

struct GraphResult {
  std::vector<ScanCell> cells;
  std::vector<ScanViolation> violations;
};

}  // namespace

ScanReport scan_check(const std::vector<Graph>& graphs,
                      const std::vector<Rat>& lambdas,
                      const std::set<ScanCheck>& checks, int jobs) {
  for (const Rat& l : lambdas)
    if (l <= 0) throw std::invalid_argument("lambda must be positive");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");

  // Degrees present in the input, for the shared per-lambda reference values.
  std::set<int> degrees;
  for (const Graph& g : graphs) {
    auto d = regular_degree(g);
    if (d && g.n() > 0) degrees.insert(*d);
  }

  bool want_cubic = checks.count(ScanCheck::CubicBound) != 0;
  bool want_y3 = checks.count(ScanCheck::Y3Bound) != 0;
  bool want_conj = checks.count(ScanCheck::Conjecture) != 0;
  bool want_tf = checks.count(ScanCheck::TfBound) != 0;

  Polynomial t3 = t3_polynomial();
  std::vector<LambdaRefs> refs(lambdas.size());
  for (size_t li = 0; li < lambdas.size(); ++li) {
    const Rat& l = lambdas[li];
    if (want_cubic) refs[li].cubic_y0 = cubic_bound(l).y0;
    if (want_y3) refs[li].big_lambda = rat_pow(1 + l, 3) / t3.eval(l);
    if (want_conj) refs[li].conjecture = conjecture_reference(l);
    for (int d : degrees) {
      refs[li].clique[d] = l / (1 + (d + 1) * l);  // alpha of K_{d+1}
      if (d >= 1) refs[li].biclique[d] = reference_occupancy(ReferenceKind::Biclique, d, l);
      if (want_tf && d >= 2) refs[li].tf_y0[d] = tf_alpha_bound(d, l);
    }
  }

  std::vector<GraphResult> results(graphs.size());

  auto process = [&](size_t gi) {
    const Graph& g = graphs[gi];
    GraphResult& res = results[gi];
    int index = static_cast<int>(gi);
    std::string g6 = write_graph6(g);

    if (g.n() == 0) {
      res.violations.push_back({index, "graph " + std::to_string(gi) +
                                           ": empty graph, checks skipped"});
      return;
    }
    auto d_opt = regular_degree(g);
    if (!d_opt) {
      res.violations.push_back({index, "graph " + std::to_string(gi) + " (" + g6 +
                                           "): not regular, checks skipped"});
      return;
    }
    int d = *d_opt;
    bool tf = is_triangle_free(g);

    auto eligible = [&](ScanCheck c) -> const char* {
      switch (c) {
        case ScanCheck::Main:
        case ScanCheck::EqualityStructure:
          return nullptr;
        case ScanCheck::Djpr:
          return d >= 1 ? nullptr : "requires degree >= 1";
        case ScanCheck::TfBound:
          if (d < 2) return "requires degree >= 2";
          return tf ? nullptr : "requires a triangle-free graph";
        case ScanCheck::CubicBound:
        case ScanCheck::Y3Bound:
        case ScanCheck::Conjecture:
          if (d != 3) return "requires a cubic graph";
          return tf ? nullptr : "requires a triangle-free graph";
      }
      return nullptr;
    };

    std::set<ScanCheck> active;
    for (ScanCheck c : checks) {
      if (const char* why = eligible(c))
        res.violations.push_back({index, "graph " + std::to_string(gi) + " (" + g6 +
                                             "): check " + scan_check_name(c) +
                                             " " + why});
      else
        active.insert(c);
    }
    if (active.empty()) return;

    Polynomial poly = independence_polynomial(g);
    Polynomial deriv = poly.derivative();
    std::vector<std::vector<Int>> counts;
    if (active.count(ScanCheck::Y3Bound)) counts = uncovered_neighbor_counts(g);

    for (size_t li = 0; li < lambdas.size(); ++li) {
      const Rat& l = lambdas[li];
      Rat value = poly.eval(l);
      Rat alpha = l * deriv.eval(l) / (g.n() * value);
      for (ScanCheck c : active) {
        ScanCell cell{index, g6, g.n(), d, l, c, false, "", ""};
        switch (c) {
          case ScanCheck::Main: {
            const Rat& ref = refs[li].clique.at(d);
            cell.pass = alpha >= ref;
            cell.lhs = rat_str(alpha);
            cell.rhs = rat_str(ref);
            break;
          }
          case ScanCheck::Djpr: {
            const Rat& ref = refs[li].biclique.at(d);
            cell.pass = alpha <= ref;
            cell.lhs = rat_str(alpha);
            cell.rhs = rat_str(ref);
            break;
          }
          case ScanCheck::TfBound: {
            const Rat& ref = refs[li].tf_y0.at(d);
            cell.pass = alpha >= ref;
            cell.lhs = rat_str(alpha);
            cell.rhs = rat_str(ref);
            break;
          }
          case ScanCheck::CubicBound: {
            const Rat& ref = refs[li].cubic_y0;
            cell.pass = alpha >= ref;
            cell.lhs = rat_str(alpha);
            cell.rhs = rat_str(ref);
            break;
          }
          case ScanCheck::Y3Bound: {
            Rat weight(0);
            Rat power(1);
            for (size_t k = 0; k < counts[3].size(); ++k) {
              if (counts[3][k] != 0) weight += Rat(counts[3][k]) * power;
              power *= l;
            }
            Rat y3 = weight / (g.n() * value);
            cell.pass = y3 >= refs[li].big_lambda;
            cell.lhs = rat_str(y3);
            cell.rhs = rat_str(refs[li].big_lambda);
            break;
          }
          case ScanCheck::Conjecture: {
            double lhs = std::pow(rat_d(value), 1.0 / g.n());
            double rhs = refs[li].conjecture;
            cell.pass = lhs >= rhs - 1e-9;
            cell.lhs = double_str(lhs);
            cell.rhs = double_str(rhs);
            break;
          }
          case ScanCheck::EqualityStructure: {
            const Rat& ref = refs[li].clique.at(d);
            bool equal = alpha == ref;
            bool structure = is_disjoint_clique_union(g, d + 1);
            cell.pass = equal == structure;
            cell.lhs = rat_str(alpha);
            cell.rhs = rat_str(ref);
            break;
          }
        }
        res.cells.push_back(std::move(cell));
      }
    }
  };

  int workers = std::min<int>(jobs, static_cast<int>(graphs.size()));
  if (workers <= 1) {
    for (size_t gi = 0; gi < graphs.size(); ++gi) process(gi);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t gi; (gi = next.fetch_add(1)) < graphs.size();) process(gi);
      });
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  for (auto& res : results) {
    for (auto& v : res.violations) report.violations.push_back(std::move(v));
    for (auto& c : res.cells) report.cells.push_back(std::move(c));
  }
  return report;
}

}  // namespace hc
