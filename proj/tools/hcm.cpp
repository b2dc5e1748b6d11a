#include <cmath>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hc/bounds.hpp"
#include "hc/graph6.hpp"
#include "hc/hardcore.hpp"
#include "hc/json_io.hpp"
#include "hc/lp.hpp"
#include "hc/scan.hpp"

namespace {

using namespace hc;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> params;
  if (text.empty()) return params;
  for (const std::string& part : split_commas(text)) {
    size_t used = 0;
    int value = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad integer parameter: '" + part + "'");
    params.push_back(value);
  }
  return params;
}

std::vector<Rat> parse_lambdas(const std::string& text) {
  std::vector<Rat> lambdas;
  for (const std::string& part : split_commas(text)) lambdas.push_back(rat_parse(part));
  if (lambdas.empty()) throw std::invalid_argument("no lambda values given");
  return lambdas;
}

bool family_from_tag(const std::string& tag, FamilySpec::Family* out) {
  using F = FamilySpec::Family;
  if (tag == "k" || tag == "complete") *out = F::Complete;
  else if (tag == "e" || tag == "empty") *out = F::Empty;
  else if (tag == "c" || tag == "cycle") *out = F::Cycle;
  else if (tag == "kdd" || tag == "biclique") *out = F::Biclique;
  else if (tag == "gp" || tag == "petersen-generalized") *out = F::PetersenGeneralized;
  else if (tag == "t3") *out = F::T3;
  else return false;
  return true;
}

// "k:4", "gp:7,2", "t3", "g6:...", or a path to a graph6 file.
std::vector<Graph> resolve_graph_spec(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return {parse_graph6(spec.substr(3))};
  size_t colon = spec.find(':');
  std::string tag = colon == std::string::npos ? spec : spec.substr(0, colon);
  FamilySpec::Family family;
  if (family_from_tag(tag, &family)) {
    std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
    return {generate(FamilySpec{family, parse_params(params)})};
  }
  return read_graph6_file(spec);
}

Graph resolve_single_graph(const std::string& spec) {
  auto graphs = resolve_graph_spec(spec);
  if (graphs.size() != 1)
    throw std::invalid_argument("expected exactly one graph, got " +
                                std::to_string(graphs.size()));
  return graphs[0];
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct Options {
  std::string graph, lambda, lambdas, model, family, params, input, checks,
      format = "json";
  std::vector<std::string> graph_specs;
  int d = -1;
  int jobs = 1;
  int corpus = 0;
  double lambda_max = 1.0, tol = 1e-10;
  bool dual = false, certify = false;
};

int run_indpoly(const Options& opt) {
  emit(to_json(independence_polynomial(resolve_single_graph(opt.graph))));
  return 0;
}

int run_occupancy(const Options& opt) {
  Graph g = resolve_single_graph(opt.graph);
  if (!opt.lambdas.empty()) {
    auto lambdas = parse_lambdas(opt.lambdas);
    if (opt.format == "csv") {
      std::cout << "lambda,alpha\n";
      for (const Rat& l : lambdas)
        std::cout << rat_str(l) << ',' << rat_str(occupancy_fraction(g, l)) << '\n';
    } else {
      Json results = Json::array();
      for (const Rat& l : lambdas) results.push_back(to_json(vertex_probabilities(g, l)));
      emit(Json{{"results", results}});
    }
    return 0;
  }
  Rat l = rat_parse(opt.lambda);
  if (opt.format == "csv") {
    std::cout << "lambda,alpha\n"
              << rat_str(l) << ',' << rat_str(occupancy_fraction(g, l)) << '\n';
    return 0;
  }
  emit(to_json(vertex_probabilities(g, l)));
  return 0;
}

int run_ydist(const Options& opt) {
  Graph g = resolve_single_graph(opt.graph);
  emit(to_json(y_distribution(g, rat_parse(opt.lambda))));
  return 0;
}

int run_hdist(const Options& opt) {
  Graph g = resolve_single_graph(opt.graph);
  auto dist = local_graph_distribution(g, rat_parse(opt.lambda));
  Json j = to_json(dist);
  j["neighborly_residual"] = rat_str(neighborly_residual(dist));
  emit(j);
  return 0;
}

int run_lp(const Options& opt) {
  Rat l = rat_parse(opt.lambda);
  LpProblem problem;
  Json out;
  if (opt.model == "general") {
    if (opt.d < 0) throw std::invalid_argument("--d required for model general");
    problem = build_lp_general(opt.d, l);
  } else if (opt.model == "tfree") {
    if (opt.d < 0) throw std::invalid_argument("--d required for model tfree");
    problem = build_lp_trianglefree(opt.d, l);
  } else if (opt.model == "cubic") {
    if (opt.d >= 0 && opt.d != 3) throw std::invalid_argument("cubic model forces d = 3");
    problem = build_lp_cubic(l, t3_polynomial());
  } else {
    throw std::invalid_argument("unknown LP model: '" + opt.model + "'");
  }
  out["model"] = opt.model;
  out["lambda"] = rat_str(l);
  out["problem"] = to_json(problem);
  LpSolution sol = simplex_solve(problem);
  out["solution"] = to_json(sol);
  if (opt.dual) {
    LpProblem dual = dual_of(problem);
    out["dual_problem"] = to_json(dual);
    out["dual_solution"] = to_json(simplex_solve(dual));
  }
  int rc = 0;
  if (opt.certify) {
    if (sol.status != LpStatus::Optimal)
      throw std::domain_error("cannot certify a non-optimal solution");
    auto report = check_complementary_slackness(problem, sol.primal, sol.dual);
    out["certificate"] = to_json(report);
    if (!report.ok()) rc = 1;
  }
  emit(out);
  return rc;
}

int run_bound(const Options& opt) {
  bool cubic = opt.model == "cubic";
  if (!cubic && opt.model != "tfree")
    throw std::invalid_argument("unknown bound model: '" + opt.model + "'");
  if (cubic) {
    if (opt.d >= 0 && opt.d != 3) throw std::invalid_argument("cubic model forces d = 3");
  } else if (opt.d < 0) {
    throw std::invalid_argument("--d required for model tfree");
  }
  auto one_json = [&](const Rat& l) {
    return cubic ? to_json(cubic_bound(l)) : to_json(tf_bound(opt.d, l));
  };
  if (!opt.lambdas.empty()) {
    auto lambdas = parse_lambdas(opt.lambdas);
    if (opt.format == "csv") {
      std::cout << "lambda,alpha_bound,objective\n";
      for (const Rat& l : lambdas) {
        if (cubic) {
          CubicBound b = cubic_bound(l);
          std::cout << rat_str(l) << ',' << rat_str(b.y0) << ',' << rat_str(b.objective()) << '\n';
        } else {
          TfBound b = tf_bound(opt.d, l);
          std::cout << rat_str(l) << ',' << rat_str(b.y0) << ',' << rat_str(b.objective()) << '\n';
        }
      }
    } else {
      Json results = Json::array();
      for (const Rat& l : lambdas) results.push_back(one_json(l));
      emit(Json{{"results", results}});
    }
    return 0;
  }
  emit(one_json(rat_parse(opt.lambda)));
  return 0;
}

int run_integrate(const Options& opt) {
  BoundModel model;
  int d = opt.d;
  if (opt.model == "cubic") {
    model = BoundModel::Cubic;
    if (d < 0) d = 3;
  } else if (opt.model == "tfree") {
    model = BoundModel::TriangleFree;
    if (d < 0) throw std::invalid_argument("--d required for model tfree");
  } else {
    throw std::invalid_argument("unknown integrate model: '" + opt.model + "'");
  }
  double value = log_partition_bound(model, d, opt.lambda_max, opt.tol);
  emit(Json{{"model", opt.model},
            {"d", d},
            {"lambda_max", double_str(opt.lambda_max)},
            {"tol", double_str(opt.tol)},
            {"log_bound", double_str(value)},
            {"exp_bound", double_str(std::exp(value))}});
  return 0;
}

int run_scan(const Options& opt) {
  std::vector<Graph> graphs;
  if (!opt.input.empty())
    for (Graph& g : read_graph6_file(opt.input)) graphs.push_back(std::move(g));
  for (const std::string& spec : opt.graph_specs)
    for (Graph& g : resolve_graph_spec(spec)) graphs.push_back(std::move(g));
  if (graphs.empty()) throw std::invalid_argument("no graphs given (use --input or --graphs)");

  std::set<ScanCheck> checks;
  for (const std::string& tag : split_commas(opt.checks))
    checks.insert(scan_check_from_name(tag));

  ScanReport report = scan_check(graphs, parse_lambdas(opt.lambdas), checks, opt.jobs);
  if (opt.format == "csv")
    std::cout << scan_csv(report);
  else
    emit(to_json(report));
  if (!report.violations.empty()) {
    for (const auto& v : report.violations) std::cerr << v.message << '\n';
    return 2;
  }
  for (const auto& cell : report.cells)
    if (!cell.pass) return 1;
  return 0;
}

int run_gen(const Options& opt) {
  if (opt.corpus > 0) {
    for (const Graph& g : naive_cubic_tf_corpus(opt.corpus))
      std::cout << write_graph6(g) << '\n';
    return 0;
  }
  FamilySpec::Family family;
  if (!family_from_tag(opt.family, &family))
    throw std::invalid_argument("unknown family: '" + opt.family + "'");
  std::cout << write_graph6(generate(FamilySpec{family, parse_params(opt.params)})) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hard-core model calculator: independence polynomials, "
               "occupancy fractions, and the occupancy-fraction LPs"};
  app.require_subcommand(1);
  Options opt;
  int rc = 0;

  auto* indpoly = app.add_subcommand("indpoly", "independence polynomial of a graph");
  indpoly->add_option("--graph", opt.graph, "graph spec")->required();
  indpoly->callback([&] { rc = run_indpoly(opt); });

  auto* occupancy = app.add_subcommand("occupancy", "occupancy fraction and vertex probabilities");
  occupancy->add_option("--graph", opt.graph)->required();
  occupancy->add_option("--lambda", opt.lambda);
  occupancy->add_option("--lambdas", opt.lambdas);
  occupancy->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  occupancy->callback([&] {
    if (opt.lambda.empty() == opt.lambdas.empty())
      throw CLI::ValidationError("occupancy", "need exactly one of --lambda/--lambdas");
    rc = run_occupancy(opt);
  });

  auto* ydist = app.add_subcommand("ydist", "distribution of the uncovered-neighbor count");
  ydist->add_option("--graph", opt.graph)->required();
  ydist->add_option("--lambda", opt.lambda)->required();
  ydist->callback([&] { rc = run_ydist(opt); });

  auto* hdist = app.add_subcommand("hdist", "distribution of the uncovered local graph");
  hdist->add_option("--graph", opt.graph)->required();
  hdist->add_option("--lambda", opt.lambda)->required();
  hdist->callback([&] { rc = run_hdist(opt); });

  auto* lp = app.add_subcommand("lp", "build and solve an occupancy LP");
  lp->add_option("--model", opt.model)->required()->check(CLI::IsMember({"general", "tfree", "cubic"}));
  lp->add_option("--d", opt.d);
  lp->add_option("--lambda", opt.lambda)->required();
  lp->add_flag("--dual", opt.dual);
  lp->add_flag("--certify", opt.certify);
  lp->callback([&] { rc = run_lp(opt); });

  auto* bound = app.add_subcommand("bound", "closed-form LP optimum with dual certificate");
  bound->add_option("--model", opt.model)->required()->check(CLI::IsMember({"tfree", "cubic"}));
  bound->add_option("--d", opt.d);
  bound->add_option("--lambda", opt.lambda);
  bound->add_option("--lambdas", opt.lambdas);
  bound->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  bound->callback([&] {
    if (opt.lambda.empty() == opt.lambdas.empty())
      throw CLI::ValidationError("bound", "need exactly one of --lambda/--lambdas");
    rc = run_bound(opt);
  });

  auto* integrate = app.add_subcommand("integrate", "log partition-function bound by quadrature");
  integrate->add_option("--model", opt.model)->required()->check(CLI::IsMember({"tfree", "cubic"}));
  integrate->add_option("--d", opt.d);
  integrate->add_option("--lambda-max", opt.lambda_max)->required();
  integrate->add_option("--tol", opt.tol);
  integrate->callback([&] { rc = run_integrate(opt); });

  auto* scan = app.add_subcommand("scan", "run bound and identity checks over a corpus");
  scan->add_option("--input", opt.input, "graph6 file");
  scan->add_option("--graphs", opt.graph_specs,
                   "graph specs (family tags, g6:..., or graph6 files)");
  scan->add_option("--lambdas", opt.lambdas)->required();
  scan->add_option("--checks", opt.checks)->required();
  scan->add_option("--jobs", opt.jobs)->check(CLI::PositiveNumber);
  scan->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  scan->callback([&] { rc = run_scan(opt); });

  auto* gen = app.add_subcommand("gen", "emit graphs as graph6");
  gen->add_option("--family", opt.family);
  gen->add_option("--params", opt.params);
  gen->add_option("--corpus-cubic-tf", opt.corpus, "all connected cubic triangle-free graphs on n vertices");
  gen->callback([&] {
    if (opt.family.empty() && opt.corpus == 0)
      throw CLI::ValidationError("gen", "need --family or --corpus-cubic-tf");
    rc = run_gen(opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
