#include "subsetmetric/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "subsetmetric/comparison.hpp"
#include "subsetmetric/errors.hpp"
#include "subsetmetric/kernels.hpp"
#include "subsetmetric/subset_metric.hpp"
#include "subsetmetric/workspace.hpp"

namespace subsetmetric::cli {

using json = nlohmann::ordered_json;

std::string format_real(double x) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::general, 9);
  return ec == std::errc() ? std::string(buffer, end) : std::string("nan");
}

namespace {

double rounded(double x) {
  const std::string text = format_real(x);
  double out = x;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kFailure;
  }
}

Workspace open(const std::string& file, const std::optional<std::string>& m_override,
               std::ostream& err) {
  Workspace ws = load_workspace(file);
  if (m_override) ws.m = parse_m_option(ws.space, *m_override);
  for (const auto& w : ws.warnings) err << "warning: " << w << '\n';
  return ws;
}

// Hamming spaces and integer-weight graphs produce integer distances, which
// doubles represent exactly.
bool integer_valued(const Workspace& ws) {
  if (ws.space->kind() == SpaceKind::hamming) return true;
  if (const auto* g = std::get_if<GraphSpace>(&ws.space->params())) {
    const auto integral = [](double w) { return std::floor(w) == w; };
    if (!std::all_of(g->edges().begin(), g->edges().end(),
                     [&](const WeightedEdge& e) { return integral(e.weight); }))
      return false;
    if (auto c = ws.m.constant_value(); c && !integral(*c)) return false;
    if (ws.m.variant() == MFunction::Variant::table) return false;
    return true;
  }
  return false;
}

struct Metric {
  bool subset = true;
  ComparisonKind kind = ComparisonKind::hausdorff;
};

Metric parse_metric(const std::string& name) {
  if (name == "subset") return {};
  if (auto kind = parse_comparison_kind(name)) return {false, *kind};
  throw UsageError("unknown metric \"" + name + "\" (expected subset, hausdorff, md, surjective, fair or link)");
}

double metric_value(const Workspace& ws, const Metric& metric, const PointSet& a, const PointSet& b) {
  if (metric.subset) return subset_distance(*ws.space, ws.m, a, b).value;
  return comparison_distance(metric.kind, *ws.space, a, b);
}

json injection_to_json(const Injection& chi) {
  json pairs = json::array();
  for (const auto& [x, y] : chi.pairs) pairs.push_back({element_to_json(x), element_to_json(y)});
  return pairs;
}

json elements_to_json(std::span<const Element> elements) {
  json out = json::array();
  for (const auto& e : elements) out.push_back(element_to_json(e));
  return out;
}

}  // namespace

int cmd_dist(const DistRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = open(request.file, request.m, err);
    const Metric metric = parse_metric(request.metric);
    const PointSet& a = ws.set(request.set_a);
    const PointSet& b = ws.set(request.set_b);
    if (metric.subset) certify_m(ws);

    json report;
    report["metric"] = request.metric;
    report["a"] = request.set_a;
    report["b"] = request.set_b;

    double value = 0.0;
    if (metric.subset) {
      const auto result = subset_distance(*ws.space, ws.m, a, b);
      value = result.value;
      report["value"] = rounded(value);
      report["witness_direction"] = result.swapped ? "b->a" : "a->b";
      report["witness"] = injection_to_json(result.witness);
      report["unmatched"] = elements_to_json(result.unmatched);
      report["reduced_a"] = elements_to_json(result.reduced_a.elements());
      report["reduced_b"] = elements_to_json(result.reduced_b.elements());
    } else {
      value = comparison_distance(metric.kind, *ws.space, a, b);
      report["value"] = rounded(value);
    }

    if (request.oracle) {
      std::optional<double> oracle;
      if (metric.subset) {
        oracle = brute_force_subset_distance(*ws.space, ws.m, a, b).value;
      } else if (metric.kind == ComparisonKind::link) {
        oracle = link_distance_by_enumeration(*ws.space, a, b);
      } else {
        // The remaining comparison metrics are themselves direct formulas or
        // exhaustive enumerations; there is no second route to run.
        throw UsageError(std::string("--oracle has no independent route for metric ") + to_string(metric.kind));
      }
      const double tolerance = integer_valued(ws) ? 0.0 : kTolerance;
      const bool agree = std::abs(*oracle - value) <= tolerance;
      report["oracle_value"] = rounded(*oracle);
      report["agree"] = agree;
      out << report.dump(2) << '\n';
      return agree ? int{kOk} : int{kFailure};
    }
    out << report.dump(2) << '\n';
    return int{kOk};
  });
}

int cmd_matrix(const MatrixRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (request.format != "csv" && request.format != "json")
      throw UsageError("--format must be csv or json");
    const Workspace ws = open(request.file, request.m, err);
    const Metric metric = parse_metric(request.metric);
    if (metric.subset) certify_m(ws);

    const std::size_t n = ws.sets.size();
    const auto matrix = kernels::pairwise_matrix(n, [&](std::size_t i, std::size_t j) {
      return metric_value(ws, metric, ws.sets[i].set, ws.sets[j].set);
    });

    if (request.format == "csv") {
      out << "set";
      for (const auto& named : ws.sets) out << ',' << named.name;
      out << '\n';
      for (std::size_t i = 0; i < n; ++i) {
        out << ws.sets[i].name;
        for (std::size_t j = 0; j < n; ++j) out << ',' << format_real(matrix[i * n + j]);
        out << '\n';
      }
    } else {
      json report;
      report["metric"] = request.metric;
      json names = json::array();
      for (const auto& named : ws.sets) names.push_back(named.name);
      report["names"] = names;
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(rounded(matrix[i * n + j]));
        rows.push_back(row);
      }
      report["matrix"] = rows;
      out << report.dump(2) << '\n';
    }
    return int{kOk};
  });
}

namespace {

constexpr std::size_t kMaxListedViolations = 20;

struct AxiomTally {
  std::size_t failures = 0;
  json counterexample;

  void fail(json example) {
    if (failures++ == 0) counterexample = std::move(example);
  }
  json to_json() const {
    json out = {{"passed", failures == 0}, {"failures", failures}};
    if (failures) out["counterexample"] = counterexample;
    return out;
  }
};

}  // namespace

int cmd_validate(const ValidateRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Workspace ws = open(request.file, request.m, err);
    std::mt19937_64 rng(request.seed);

    // Element pool: set elements and table keys, plus random draws from the
    // space when M is defined everywhere.
    std::vector<Element> pool = m_check_sample(ws);
    if (ws.m.variant() != MFunction::Variant::table)
      for (std::size_t i = 0; i < request.samples; ++i) pool.push_back(sample_element(*ws.space, rng));
    if (pool.empty()) throw UsageError("nothing to validate: no sets and no samples");

    json report;
    const auto condition = validate_condition2(*ws.space, ws.m, pool);
    json violations = json::array();
    for (std::size_t i = 0; i < std::min(condition.violations.size(), kMaxListedViolations); ++i) {
      const auto& v = condition.violations[i];
      violations.push_back(
          {{"kind", v.kind == Condition2Violation::Kind::below_distance ? "d(x,y) > M(x)"
                                                                        : "M(x) > d(x,z) + M(z)"},
           {"x", element_to_json(v.x)},
           {"other", element_to_json(v.other)},
           {"lhs", rounded(v.lhs)},
           {"rhs", rounded(v.rhs)}});
    }
    report["condition2"] = {{"passed", condition.passed()},
                            {"checked_pairs", condition.checked_pairs},
                            {"violation_count", condition.violations.size()},
                            {"violations", violations}};

    double max_m = 0.0;
    for (const auto& x : pool) max_m = std::max(max_m, ws.m.value_trusted(x));
    const bool bound_holds = condition.min_m > 0.0 && condition.min_m >= max_m / 2.0 - kTolerance;
    report["m_lower_bound"] = {{"passed", bound_holds},
                               {"min_m", rounded(condition.min_m)},
                               {"half_max_m", rounded(max_m / 2.0)}};

    // Triples mix named sets with random subsets of the pool, so all three
    // cardinality orderings and nonempty intersections occur.
    std::uniform_int_distribution<std::size_t> pick_pool(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_size(0, 5);
    std::bernoulli_distribution use_named(ws.sets.empty() ? 0.0 : 0.5);
    auto draw = [&]() -> PointSet {
      if (use_named(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, ws.sets.size() - 1);
        return ws.sets[pick(rng)].set;
      }
      std::vector<Element> elements;
      for (std::size_t k = pick_size(rng); k > 0; --k) elements.push_back(pool[pick_pool(rng)]);
      return PointSet(ws.space, std::move(elements));
    };
    auto set_json = [](const PointSet& s) { return elements_to_json(s.elements()); };

    AxiomTally nonnegativity, identity, symmetry, triangle;
    for (std::size_t t = 0; t < request.samples; ++t) {
      const PointSet x = draw();
      const PointSet y = draw();
      const PointSet z = draw();
      const auto d = [&](const PointSet& p, const PointSet& q) {
        return subset_distance(*ws.space, ws.m, p, q).value;
      };
      const double xy = d(x, y);
      const double yx = d(y, x);
      const double xz = d(x, z);
      const double zy = d(z, y);
      if (xy < 0.0) nonnegativity.fail({{"a", set_json(x)}, {"b", set_json(y)}, {"d", xy}});
      if (d(x, x) != 0.0 || ((xy == 0.0) != (x == y)))
        identity.fail({{"a", set_json(x)}, {"b", set_json(y)}, {"d", xy}});
      if (xy != yx) symmetry.fail({{"a", set_json(x)}, {"b", set_json(y)}, {"d_ab", xy}, {"d_ba", yx}});
      if (xy > xz + zy + kTolerance)
        triangle.fail({{"x1", set_json(x)}, {"x2", set_json(y)}, {"x3", set_json(z)},
                       {"d12", xy}, {"d13", xz}, {"d32", zy}});
    }
    report["axioms"] = {{"triples", request.samples},
                        {"nonnegativity", nonnegativity.to_json()},
                        {"identity", identity.to_json()},
                        {"symmetry", symmetry.to_json()},
                        {"triangle", triangle.to_json()}};

    const bool passed = condition.passed() && bound_holds && nonnegativity.failures == 0 &&
                        identity.failures == 0 && symmetry.failures == 0 && triangle.failures == 0;
    report["passed"] = passed;
    out << report.dump(2) << '\n';
    return passed ? int{kOk} : int{kFailure};
  });
}

int cmd_demo_incompleteness(const DemoRequest& request, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (request.n_max < 2) throw UsageError("--n-max must be at least 2");
    if (request.format != "text" && request.format != "json")
      throw UsageError("--format must be text or json");

    const auto space = make_space(EuclideanBox({{0.0, 1.0}}));
    const auto m = MFunction::eccentricity(space);
    auto set_of = [&](std::vector<double> xs) {
      std::vector<Element> elements;
      for (double x : xs) elements.emplace_back(Point{{x}});
      return PointSet(space, std::move(elements));
    };
    const auto n_max = static_cast<std::size_t>(request.n_max);
    std::vector<PointSet> seq;
    for (std::size_t k = 1; k <= n_max; ++k) seq.push_back(set_of({0.0, 1.0 / static_cast<double>(k)}));
    auto d = [&](const PointSet& p, const PointSet& q) { return subset_distance(*space, m, p, q).value; };

    const auto pairwise = kernels::pairwise_matrix(n_max, [&](std::size_t i, std::size_t j) { return d(seq[i], seq[j]); });
    const PointSet origin = set_of({0.0});
    const std::vector<double> grid = {0.1, 0.2, 0.25, 0.5, 0.75, 1.0};

    if (request.format == "json") {
      json report;
      report["n_max"] = request.n_max;
      json rows = json::array();
      for (std::size_t i = 0; i < n_max; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n_max; ++j) row.push_back(rounded(pairwise[i * n_max + j]));
        rows.push_back(row);
      }
      report["pairwise"] = rows;
      json to_origin = json::array();
      json to_pair = json::array();
      for (std::size_t k = 1; k <= n_max; ++k) {
        const double inv = 1.0 / static_cast<double>(k);
        to_origin.push_back({{"n", k}, {"value", rounded(d(seq[k - 1], origin))}, {"expected", rounded(1.0 - inv)}});
        for (double a : grid)
          to_pair.push_back({{"n", k}, {"a", a}, {"value", rounded(d(seq[k - 1], set_of({0.0, a})))},
                             {"expected", rounded(std::abs(a - inv))}});
      }
      report["to_origin"] = to_origin;
      report["to_pair"] = to_pair;
      out << report.dump(2) << '\n';
      return int{kOk};
    }

    out << "A_k = {0, 1/k} in [0, 1], M(y) = max(y, 1 - y)\n\nd_S(A_n, A_m):\n";
    out << "  n\\m";
    for (std::size_t j = 1; j <= n_max; ++j) out << '\t' << j;
    out << '\n';
    for (std::size_t i = 0; i < n_max; ++i) {
      out << "  " << i + 1;
      for (std::size_t j = 0; j < n_max; ++j) out << '\t' << format_real(pairwise[i * n_max + j]);
      out << '\n';
    }
    out << "\nd_S(A_n, {0}) approaches 1, so {0} is not the limit:\n  n\td_S\t1 - 1/n\n";
    for (std::size_t k = 1; k <= n_max; ++k)
      out << "  " << k << '\t' << format_real(d(seq[k - 1], origin)) << '\t'
          << format_real(1.0 - 1.0 / static_cast<double>(k)) << '\n';
    out << "\nd_S(A_n, {0, a}) = |a - 1/n| tends to a > 0:\n  n\ta\td_S\t|a - 1/n|\n";
    for (std::size_t k = 1; k <= n_max; ++k)
      for (double a : grid)
        out << "  " << k << '\t' << format_real(a) << '\t' << format_real(d(seq[k - 1], set_of({0.0, a})))
            << '\t' << format_real(std::abs(a - 1.0 / static_cast<double>(k))) << '\n';
    return int{kOk};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subset metric and classical set distances over bounded metric spaces"};
  app.require_subcommand(1);

  DistRequest dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two named sets");
  dist_cmd->add_option("file", dist.file, "Workspace JSON or sequence text file")->required();
  dist_cmd->add_option("set_a", dist.set_a)->required();
  dist_cmd->add_option("set_b", dist.set_b)->required();
  dist_cmd->add_option("--metric", dist.metric, "subset|hausdorff|md|surjective|fair|link");
  dist_cmd->add_option("--m", dist.m, "constant:<v>|diameter|eccentricity (overrides the file)");
  dist_cmd->add_flag("--oracle", dist.oracle, "Cross-check with the exhaustive route");

  MatrixRequest matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "All-pairs distance matrix over the named sets");
  matrix_cmd->add_option("file", matrix.file)->required();
  matrix_cmd->add_option("--metric", matrix.metric, "subset|hausdorff|md|surjective|fair|link");
  matrix_cmd->add_option("--m", matrix.m, "constant:<v>|diameter|eccentricity");
  matrix_cmd->add_option("--format", matrix.format, "csv|json");

  ValidateRequest validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check M and the metric axioms of d_S");
  validate_cmd->add_option("file", validate.file)->required();
  validate_cmd->add_option("--m", validate.m, "constant:<v>|diameter|eccentricity");
  validate_cmd->add_option("--samples", validate.samples, "Random elements and set triples to check");
  validate_cmd->add_option("--seed", validate.seed, "Seed for every random draw");

  DemoRequest demo;
  auto* demo_cmd =
      app.add_subcommand("demo-incompleteness", "A Cauchy sequence of finite sets in [0, 1] with no limit");
  demo_cmd->add_option("--n-max", demo.n_max, "Largest k in A_k = {0, 1/k}");
  demo_cmd->add_option("--format", demo.format, "text|json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kUsage};
  }

  if (*dist_cmd) return cmd_dist(dist, out, err);
  if (*matrix_cmd) return cmd_matrix(matrix, out, err);
  if (*validate_cmd) return cmd_validate(validate, out, err);
  return cmd_demo_incompleteness(demo, out, err);
}

}  // namespace subsetmetric::cli
