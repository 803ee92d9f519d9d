#include "idem/cli.hpp"

#include "idem/analysis.hpp"
#include "idem/axioms.hpp"
#include "idem/bellman.hpp"
#include "idem/errors.hpp"
#include "idem/fuzzy.hpp"
#include "idem/graph.hpp"
#include "idem/sampling.hpp"
#include "idem/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace idem::cli {
namespace {

using ordered_json = nlohmann::ordered_json;
using interval_ring = interval_semiring<semiring>;

constexpr std::uint64_t default_seed = 0x5eed;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t seed_from_env() {
  const char* text = std::getenv("IDEMPOTENT_SEED");
  if (text == nullptr || *text == '\0') return default_seed;
  char* end = nullptr;
  const auto value = std::strtoull(text, &end, 10);
  if (*end != '\0') throw parse_error("IDEMPOTENT_SEED must be a nonnegative integer");
  return value;
}

ordered_json json_value(const semiring& ring, double x) {
  if (std::isinf(x)) return ring.format(x);
  return x;
}

ordered_json json_value(const interval_ring& ring, const interval<double>& x) {
  return ordered_json::array({json_value(ring.base(), x.lo), json_value(ring.base(), x.hi)});
}

template <class R>
ordered_json json_matrix(const matrix<R>& m) {
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_value(m.ring(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R>
ordered_json json_column(const matrix<R>& m, std::size_t col) {
  auto out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(json_value(m.ring(), m(i, col)));
  return out;
}

template <class R>
std::string text_column(const matrix<R>& m, std::size_t col) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ' ';
    out += m.ring().format(m(i, col));
  }
  return out + "\n";
}

ordered_json json_function(const finite_function<semiring>& f) {
  ordered_json out = ordered_json::object();
  for (const auto& [point, v] : f.values()) out[point] = json_value(f.ring(), v);
  return out;
}

/// A solved system, or the entry that refused to settle.
struct solve_outcome {
  ordered_json solution;
  std::string solution_text;
  std::size_t iterations = 0;
  bool converged = false;
  std::string error;
  std::size_t witness_row = 0;
  std::size_t witness_col = 0;
};

template <class R>
void record_divergence(solve_outcome& out, const matrix<R>& h, const matrix<R>& f,
                       const bellman_solution<R>& sol) {
  const matrix<R> next = h * sol.x + f;
  const auto [i, j] = detail::first_difference(sol.x, next);
  out.witness_row = i;
  out.witness_col = j;
  out.error = "no fixed point after " + std::to_string(sol.iterations) + " " +
              std::string(to_string(sol.method)) + " iterations: entry (" + std::to_string(i) +
              ", " + std::to_string(j) + ") still changes";
}

template <class R>
void fill_solution(solve_outcome& out, const matrix<R>& x, bool as_vector) {
  if (as_vector) {
    out.solution = json_column(x, 0);
    out.solution_text = text_column(x, 0);
  } else {
    out.solution = json_matrix(x);
    out.solution_text = format(x);
  }
}

/// Solves X = H X + F with the requested method. For interval systems the
/// closure method uses the bound-wise exact solver.
template <class R>
solve_outcome solve_system(const matrix<R>& h, const matrix<R>& f, bellman_method method,
                           std::size_t max_iter, bool as_vector) {
  solve_outcome out;
  try {
    if constexpr (std::is_same_v<R, interval_ring>) {
      if (method == bellman_method::star) {
        auto sol = solve_bellman_interval(h, f);
        out.iterations = sol.iterations;
        out.converged = true;
        fill_solution(out, sol.x, as_vector);
        return out;
      }
    }
    auto sol = solve_bellman(h, f, method, max_iter);
    out.iterations = sol.iterations;
    out.converged = sol.converged;
    if (!sol.converged) {
      record_divergence(out, h, f, sol);
      return out;
    }
    fill_solution(out, sol.x, as_vector);
  } catch (const divergence_error& e) {
    out.converged = false;
    out.error = e.what();
    out.witness_row = e.row();
    out.witness_col = e.col();
  }
  return out;
}

template <class R>
solve_outcome solve_graph(const matrix<R>& h, const graph_query& query, bellman_method method,
                          std::size_t max_iter) {
  const std::size_t n = h.rows();
  if (query.kind == query_kind::distances) {
    if (query.source >= n) {
      throw domain_error("source node " + std::to_string(query.source) + " is outside [0, " +
                         std::to_string(n) + ")");
    }
    if (method == bellman_method::star) {
      // Row `source` of the closure; the closure's witness is in graph coordinates.
      auto out = solve_system(h, matrix<R>::identity(h.ring(), n), method, max_iter, false);
      if (out.converged) {
        out.solution = out.solution.at(query.source);
        std::istringstream rows(out.solution_text);
        std::string line;
        for (std::size_t i = 0; i <= query.source; ++i) std::getline(rows, line);
        out.solution_text = line + "\n";
      }
      return out;
    }
    // Distances from the source solve x = H^T x + e_source (all built-in rings commute).
    matrix<R> f(h.ring(), n, 1);
    f(query.source, 0) = h.ring().one();
    return solve_system(h.transposed(), f, method, max_iter, true);
  }
  return solve_system(h, matrix<R>::identity(h.ring(), n), method, max_iter, false);
}

struct solve_options {
  std::string ring;
  std::string query = "closure";
  std::string method = "star";
  std::optional<std::size_t> max_iter;
  std::string format = "text";
  std::string rhs;
  std::string input;
  bool timing = false;
};

int emit(const ordered_json& doc, const std::vector<std::pair<std::string, std::string>>& text,
         const std::string& format, std::ostream& out, int code) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : text) {
      if (value.find('\n') != std::string::npos) out << key << ":\n" << value;
      else out << key << ": " << value << "\n";
    }
  }
  return code;
}

int run_solve(const solve_options& opts, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  std::optional<semiring> ring;
  if (!opts.ring.empty()) ring = semiring_by_name(opts.ring);
  const graph_query query = graph_query::parse(opts.query);
  const bellman_method method = parse_bellman_method(opts.method);

  ordered_json problem_echo;
  solve_outcome result;
  std::string ring_name;

  if (query.kind == query_kind::bellman) {
    if (!ring) throw parse_error("bellman query needs --ring");
    if (opts.rhs.empty()) throw parse_error("bellman query needs --rhs <F-file>");
    const std::string h_text = read_file(opts.input);
    const std::string f_text = read_file(opts.rhs);
    const bool intervals = h_text.find('[') != std::string::npos ||
                           f_text.find('[') != std::string::npos;
    ring_name = std::string(ring->name());
    auto run = [&](const auto& r) {
      const auto h = parse_matrix(r, h_text);
      const auto f = parse_matrix(r, f_text);
      problem_echo["rows"] = h.rows();
      problem_echo["rhs_cols"] = f.cols();
      problem_echo["interval"] = intervals;
      result = solve_system(h, f, method, opts.max_iter.value_or(std::max<std::size_t>(h.rows(), 1)),
                            false);
    };
    if (intervals) run(interval_ring(*ring));
    else run(*ring);
  } else {
    graph_problem problem = parse_graph(read_file(opts.input), ring);
    problem.query = query;
    ring_name = std::string(problem.ring.name());
    problem_echo = ordered_json::parse(to_json(problem));
    const std::size_t max_iter =
        opts.max_iter.value_or(std::max<std::size_t>(problem.node_count, 1));
    if (problem.interval_weights) {
      result = solve_graph(interval_adjacency_matrix(problem), query, method, max_iter);
    } else {
      result = solve_graph(adjacency_matrix(problem), query, method, max_iter);
    }
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  ordered_json doc;
  doc["status"] = result.converged ? "ok" : "divergent";
  doc["ring"] = ring_name;
  doc["query"] = query.to_string();
  doc["method"] = std::string(to_string(method));
  doc["problem"] = problem_echo;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  std::vector<std::pair<std::string, std::string>> text{
      {"status", doc["status"].get<std::string>()},
      {"ring", ring_name},
      {"query", query.to_string()},
      {"method", std::string(to_string(method))},
      {"iterations", std::to_string(result.iterations)},
      {"converged", result.converged ? "true" : "false"},
  };
  if (result.converged) {
    doc["solution"] = result.solution;
    text.emplace_back("solution", result.solution_text);
  } else {
    doc["error"] = result.error;
    doc["witness"] = {{"row", result.witness_row}, {"col", result.witness_col}};
    text.emplace_back("error", result.error);
    text.emplace_back("witness", std::to_string(result.witness_row) + " " +
                                     std::to_string(result.witness_col));
  }
  if (opts.timing) {
    doc["timing_ms"] = elapsed_ms;
    text.emplace_back("timing_ms", std::to_string(elapsed_ms));
  }
  return emit(doc, text, opts.format, out, result.converged ? exit_code::ok : exit_code::diverged);
}

int run_check_axioms(const std::string& ring_name, std::size_t trials, bool intervals,
                     const std::string& format, std::ostream& out) {
  const semiring& ring = semiring_by_name(ring_name);
  const std::uint64_t seed = seed_from_env();
  const axiom_report report = intervals
                                  ? check_axioms(interval_ring(ring),
                                                 interval_sampler(interval_ring(ring)), trials, seed)
                                  : check_axioms(ring, scalar_sampler(ring), trials, seed);
  ordered_json doc;
  doc["ring"] = report.ring;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["all_passed"] = report.all_passed();
  auto axioms = ordered_json::array();
  std::vector<std::pair<std::string, std::string>> text{
      {"ring", report.ring}, {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
  for (const auto& r : report.results) {
    ordered_json a;
    a["name"] = r.name;
    a["status"] = std::string(to_string(r.status));
    a["trials"] = r.trials;
    std::string line(to_string(r.status));
    if (r.status == axiom_status::failed) {
      a["counterexample"] = r.counterexample;
      line += " (" + r.counterexample + ")";
    }
    axioms.push_back(std::move(a));
    text.emplace_back(r.name, line);
  }
  doc["axioms"] = std::move(axioms);
  text.emplace_back("all_passed", report.all_passed() ? "true" : "false");
  return emit(doc, text, format, out,
              report.all_passed() ? exit_code::ok : exit_code::axioms_failed);
}

int run_integrate(const std::string& ring_name, const std::string& function,
                  const std::optional<std::string>& density, const std::string& format,
                  std::ostream& out) {
  const semiring& ring = semiring_by_name(ring_name);
  const auto phi = parse_function(ring, function);
  ordered_json doc;
  doc["ring"] = std::string(ring.name());
  doc["function"] = json_function(phi);
  double value = 0.0;
  if (density) {
    const idempotent_measure<semiring> m(parse_function(ring, *density));
    doc["density"] = json_function(m.density());
    value = integrate_against(phi, m);
  } else {
    value = integrate(phi);
  }
  doc["integral"] = json_value(ring, value);
  return emit(doc, {{"integral", ring.format(value)}}, format, out, exit_code::ok);
}

int run_fuzzy(const std::string& ring_name, const std::string& operation,
              const std::vector<std::string>& operands, const std::string& format,
              std::ostream& out) {
  const semiring& ring = semiring_by_name(ring_name);
  const std::size_t needed = operation == "complement" ? 1 : 2;
  if (operands.size() != needed) {
    throw parse_error(operation + " takes " + std::to_string(needed) + " set literal(s)");
  }
  std::vector<finite_function<semiring>> parsed;
  universe points;
  for (const auto& text : operands) {
    parsed.push_back(parse_function(ring, text));
    for (const auto& p : parsed.back().support()) points.insert(p);
  }
  ordered_json doc;
  doc["ring"] = std::string(ring.name());
  doc["operation"] = operation;
  const fuzzy_set<semiring> a(points, parsed[0]);
  if (operation == "possibility") {
    const idempotent_measure<semiring> dist(parsed[1]);
    const double value = possibility(a, dist);
    doc["possibility"] = json_value(ring, value);
    return emit(doc, {{"possibility", ring.format(value)}}, format, out, exit_code::ok);
  }
  fuzzy_set<semiring> result = a;
  if (operation == "union") result = fuzzy_union(a, fuzzy_set<semiring>(points, parsed[1]));
  else if (operation == "intersect")
    result = fuzzy_intersection(a, fuzzy_set<semiring>(points, parsed[1]));
  else if (operation == "complement") result = complement(a);
  else throw parse_error("unknown fuzzy operation '" + operation + "'");
  // Report every point of the universe, including those with grade zero.
  finite_function<semiring> grades(ring);
  for (const auto& p : result.universe()) grades.set(p, result.grade(p));
  doc["result"] = json_function(grades);
  doc["crisp"] = is_crisp(result);
  return emit(doc, {{"result", idem::format(grades)}, {"crisp", is_crisp(result) ? "true" : "false"}},
              format, out, exit_code::ok);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idempotent semiring toolkit: algebraic path problems, axiom checks, "
               "idempotent integrals and fuzzy sets."};
  app.name("idem");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"text", "json"};

  solve_options solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a path problem or X = H X + F");
  solve_cmd->add_option("--ring", solve.ring, "Semiring name");
  solve_cmd->add_option("--query", solve.query, "closure | dist:<src> | bellman");
  solve_cmd->add_option("--method", solve.method, "star | jacobi | gauss-seidel")
      ->check(CLI::IsMember({"star", "jacobi", "gauss-seidel"}));
  solve_cmd->add_option("--max-iter", solve.max_iter, "Iteration cap (default: node count)");
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember(formats));
  solve_cmd->add_option("--rhs", solve.rhs, "Right-hand side F (bellman query)");
  solve_cmd->add_flag("--timing", solve.timing, "Report wall-clock time");
  solve_cmd->add_option("input", solve.input, "Graph (edge list or JSON) or H matrix")
      ->required();

  std::string axioms_ring;
  std::size_t trials = 1000;
  bool axioms_interval = false;
  std::string axioms_format = "text";
  auto* axioms_cmd = app.add_subcommand("check-axioms", "Sample the semiring laws");
  axioms_cmd->add_option("--ring", axioms_ring)->required();
  axioms_cmd->add_option("--trials", trials);
  axioms_cmd->add_flag("--interval", axioms_interval, "Check the interval extension I(S)");
  axioms_cmd->add_option("--format", axioms_format)->check(CLI::IsMember(formats));

  std::string integrate_ring;
  std::string function;
  std::optional<std::string> density;
  std::string integrate_format = "text";
  auto* integrate_cmd = app.add_subcommand("integrate", "Idempotent integral of a function");
  integrate_cmd->add_option("--ring", integrate_ring)->required();
  integrate_cmd->add_option("function", function, "\"point:value ...\"")->required();
  integrate_cmd->add_option("--density", density, "Measure density \"point:value ...\"");
  integrate_cmd->add_option("--format", integrate_format)->check(CLI::IsMember(formats));

  std::string fuzzy_ring;
  std::string operation;
  std::vector<std::string> operands;
  std::string fuzzy_format = "text";
  auto* fuzzy_cmd = app.add_subcommand("fuzzy", "Generalized fuzzy set operations");
  fuzzy_cmd->add_option("--ring", fuzzy_ring)->required();
  fuzzy_cmd->add_option("operation", operation, "union | intersect | possibility | complement")
      ->required()
      ->check(CLI::IsMember({"union", "intersect", "possibility", "complement"}));
  fuzzy_cmd->add_option("sets", operands, "Set literals \"point:grade ...\"");
  fuzzy_cmd->add_option("--format", fuzzy_format)->check(CLI::IsMember(formats));

  std::vector<std::string> argv_storage{"idem"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "idem: " << e.what() << "\n";
    return exit_code::invalid_input;
  }

  try {
    if (*solve_cmd) return run_solve(solve, out);
    if (*axioms_cmd) return run_check_axioms(axioms_ring, trials, axioms_interval, axioms_format, out);
    if (*integrate_cmd) return run_integrate(integrate_ring, function, density, integrate_format, out);
    if (*fuzzy_cmd) return run_fuzzy(fuzzy_ring, operation, operands, fuzzy_format, out);
  } catch (const std::exception& e) {
    err << "idem: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
  return exit_code::invalid_input;
}

} // namespace idem::cli
