#include "idem/graph.hpp"

#include "idem/errors.hpp"
#include "idem/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

namespace idem {

using ordered_json = nlohmann::ordered_json;

graph_query graph_query::parse(std::string_view text) {
  if (text == "closure") return {query_kind::closure, 0};
  if (text == "bellman") return {query_kind::bellman, 0};
  if (text.substr(0, 5) == "dist:") {
    const auto digits = text.substr(5);
    std::size_t source = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), source);
    if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size()) {
      return {query_kind::distances, source};
    }
  }
  throw parse_error("unknown query '" + std::string(text) +
                    "' (expected closure, dist:<src> or bellman)");
}

std::string graph_query::to_string() const {
  switch (kind) {
  case query_kind::closure: return "closure";
  case query_kind::distances: return "dist:" + std::to_string(source);
  case query_kind::bellman: return "bellman";
  }
  return "?";
}

void graph_problem::add_edge(std::size_t from, std::size_t to, interval<double> weight) {
  if (from >= node_count || to >= node_count) {
    throw domain_error("edge " + std::to_string(from) + " -> " + std::to_string(to) +
                       " references a node outside [0, " + std::to_string(node_count) + ")");
  }
  ring.check(weight.lo);
  ring.check(weight.hi);
  auto pos = std::lower_bound(edges.begin(), edges.end(), std::pair{from, to},
                              [](const weighted_edge& e, const std::pair<std::size_t, std::size_t>& key) {
                                return std::pair{e.from, e.to} < key;
                              });
  if (pos != edges.end() && pos->from == from && pos->to == to) {
    pos->weight = {ring.add(pos->weight.lo, weight.lo), ring.add(pos->weight.hi, weight.hi)};
  } else {
    edges.insert(pos, weighted_edge{from, to, weight});
  }
}

namespace {

interval<double> parse_weight(const semiring& ring, std::string_view token, bool& is_interval) {
  const bool bracketed = !token.empty() && token.front() == '[';
  if (bracketed || token.find(',') != std::string_view::npos) {
    is_interval = true;
    return interval_semiring<semiring>(ring).parse(token);
  }
  const double w = ring.parse(token);
  return {w, w};
}

std::size_t parse_index(std::string_view token, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw parse_error(std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

graph_problem parse_edge_list(std::string_view text, const semiring& ring) {
  graph_problem problem;
  problem.ring = ring;
  bool have_count = false;
  for (const auto& [line_no, line] : content_lines(text)) {
    try {
      if (!have_count) {
        const auto tokens = split_tokens(line);
        if (tokens.size() != 1) throw parse_error("first line must hold the node count");
        problem.node_count = parse_index(tokens[0], "node count");
        have_count = true;
        continue;
      }
      // The weight is everything after the two node indices, so "[1, 3]" may contain blanks.
      std::string_view rest = line;
      std::string_view fields[2];
      for (auto& field : fields) {
        const auto begin = rest.find_first_not_of(" \t");
        if (begin == std::string_view::npos) throw parse_error("expected 'from to weight'");
        rest = rest.substr(begin);
        const auto end = rest.find_first_of(" \t");
        field = rest.substr(0, end);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
      }
      const auto first = rest.find_first_not_of(" \t");
      if (first == std::string_view::npos) throw parse_error("expected 'from to weight'");
      rest = rest.substr(first, rest.find_last_not_of(" \t") - first + 1);
      if (split_tokens(rest).size() != 1) throw parse_error("trailing text after weight");
      const auto from = parse_index(fields[0], "source node");
      const auto to = parse_index(fields[1], "target node");
      bool is_interval = false;
      const auto weight = parse_weight(ring, rest, is_interval);
      problem.interval_weights = problem.interval_weights || is_interval;
      problem.add_edge(from, to, weight);
    } catch (const parse_error& e) {
      if (e.line() != 0) throw;
      throw parse_error(e.what(), line_no);
    } catch (const std::exception& e) {
      throw parse_error(e.what(), line_no);
    }
  }
  if (!have_count) throw parse_error("empty graph: missing node count");
  return problem;
}

double json_scalar(const semiring& ring, const ordered_json& j) {
  if (j.is_number()) return ring.check(j.get<double>());
  if (j.is_string()) return ring.parse(j.get<std::string>());
  throw parse_error("weight must be a number or \"inf\"/\"-inf\"");
}

graph_problem parse_json_graph(std::string_view text, std::optional<semiring> ring) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("graph JSON must be an object");
  try {
    if (doc.contains("ring")) {
      const semiring& named = semiring_by_name(doc.at("ring").get<std::string>());
      if (ring && !(*ring == named)) {
        throw parse_error("graph declares ring '" + std::string(named.name()) +
                          "' but '" + std::string(ring->name()) + "' was requested");
      }
      ring = named;
    }
    if (!ring) throw parse_error("no semiring given");
    graph_problem problem;
    problem.ring = *ring;
    problem.node_count = doc.at("nodes").get<std::size_t>();
    std::size_t index = 0;
    for (const auto& e : doc.value("edges", ordered_json::array())) {
      try {
        const auto from = e.at("from").get<std::size_t>();
        const auto to = e.at("to").get<std::size_t>();
        const auto& w = e.at("weight");
        interval<double> weight{};
        if (w.is_array()) {
          if (w.size() != 2) throw parse_error("interval weight needs [lo, hi]");
          weight = interval_semiring<semiring>(*ring).make(json_scalar(*ring, w[0]),
                                                           json_scalar(*ring, w[1]));
          problem.interval_weights = true;
        } else {
          const double x = json_scalar(*ring, w);
          weight = {x, x};
        }
        problem.add_edge(from, to, weight);
      } catch (const std::exception& ex) {
        throw parse_error("edge " + std::to_string(index) + ": " + ex.what());
      }
      ++index;
    }
    return problem;
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error(e.what());
  }
}

ordered_json json_weight(const semiring& ring, double x) {
  if (std::isinf(x)) return ring.format(x);
  return x;
}

} // namespace

graph_problem parse_graph(std::string_view text, std::optional<semiring> ring) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_graph(text, ring);
  if (!ring) throw parse_error("edge-list input needs a semiring (--ring)");
  return parse_edge_list(text, *ring);
}

std::string to_edge_list(const graph_problem& problem) {
  std::string out = std::to_string(problem.node_count) + "\n";
  for (const auto& e : problem.edges) {
    out += std::to_string(e.from) + " " + std::to_string(e.to) + " ";
    if (problem.interval_weights) {
      out += problem.ring.format(e.weight.lo) + "," + problem.ring.format(e.weight.hi);
    } else {
      out += problem.ring.format(e.weight.lo);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const graph_problem& problem) {
  ordered_json doc;
  doc["nodes"] = problem.node_count;
  doc["ring"] = std::string(problem.ring.name());
  auto edges = ordered_json::array();
  for (const auto& e : problem.edges) {
    ordered_json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    if (problem.interval_weights) {
      edge["weight"] = ordered_json::array(
          {json_weight(problem.ring, e.weight.lo), json_weight(problem.ring, e.weight.hi)});
    } else {
      edge["weight"] = json_weight(problem.ring, e.weight.lo);
    }
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

matrix<semiring> adjacency_matrix(const graph_problem& problem) {
  matrix<semiring> h(problem.ring, problem.node_count, problem.node_count);
  for (const auto& e : problem.edges) {
    if (!problem.ring.equal(e.weight.lo, e.weight.hi)) {
      throw domain_error("graph has interval weights; use the interval solver");
    }
    h(e.from, e.to) = e.weight.lo;
  }
  return h;
}

matrix<interval_semiring<semiring>> interval_adjacency_matrix(const graph_problem& problem) {
  const interval_semiring<semiring> ring(problem.ring);
  matrix<interval_semiring<semiring>> h(ring, problem.node_count, problem.node_count);
  for (const auto& e : problem.edges) h(e.from, e.to) = ring.make(e.weight.lo, e.weight.hi);
  return h;
}

matrix<semiring> shortest_paths(const graph_problem& problem) {
  return kleene_star(adjacency_matrix(problem));
}

} // namespace idem
