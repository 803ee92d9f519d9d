#pragma once

#include "idem/bellman.hpp"
#include "idem/interval.hpp"
#include "idem/matrix.hpp"
#include "idem/semiring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idem {

enum class query_kind { closure, distances, bellman };

struct graph_query {
  query_kind kind = query_kind::closure;
  std::size_t source = 0;  // distances only

  /// "closure", "dist:<src>" or "bellman".
  static graph_query parse(std::string_view text);
  std::string to_string() const;
};

struct weighted_edge {
  std::size_t from = 0;
  std::size_t to = 0;
  /// Scalar weights are stored as degenerate intervals.
  interval<double> weight{};

  friend bool operator==(const weighted_edge&, const weighted_edge&) = default;
};

/// A weighted digraph over one of the built-in semirings. Edges are kept
/// sorted by (from, to) with duplicates already combined by the ring's
/// addition.
struct graph_problem {
  std::size_t node_count = 0;
  semiring ring = min_plus;
  std::vector<weighted_edge> edges;
  bool interval_weights = false;
  graph_query query{};

  /// Adds an edge, combining it with an existing (from, to) edge.
  void add_edge(std::size_t from, std::size_t to, interval<double> weight);
  void add_edge(std::size_t from, std::size_t to, double weight) {
    add_edge(from, to, interval<double>{weight, weight});
  }

  friend bool operator==(const graph_problem& a, const graph_problem& b) {
    return a.node_count == b.node_count && a.ring == b.ring && a.edges == b.edges &&
           a.interval_weights == b.interval_weights;
  }
};

/**
 * Reads a graph in either of two forms.
 *
 * Edge list: the first content line is the node count, each further line is
 * "from to weight". Interval weights are written "lo,hi" or "[lo, hi]".
 * '#' starts a comment.
 *
 * JSON: {"nodes": 3, "ring": "min-plus", "edges": [{"from": 0, "to": 1,
 * "weight": 4}, ...]} where a weight is a number, "inf"/"-inf", or a
 * two-element [lo, hi] array. "ring" is optional when `ring` is given; if both
 * are present they must agree.
 *
 * Throws parse_error (with a line number for edge lists) on malformed input,
 * out-of-range nodes, or weights outside the ring's carrier.
 */
graph_problem parse_graph(std::string_view text, std::optional<semiring> ring);

/// Canonical edge-list text; parse_graph(to_edge_list(p), p.ring) == p.
std::string to_edge_list(const graph_problem& problem);
/// Canonical JSON text (fixed key order).
std::string to_json(const graph_problem& problem);

/// H(i, j) = weight of edge i -> j, the ring's zero where there is no edge.
/// Throws domain_error if the graph carries proper interval weights.
matrix<semiring> adjacency_matrix(const graph_problem& problem);
matrix<interval_semiring<semiring>> interval_adjacency_matrix(const graph_problem& problem);

/// Closure of the adjacency matrix: entry (i, j) is the sum over all paths
/// i -> j of the product of their weights. Shortest paths under min-plus,
/// bottleneck capacities under max-min, reachability under boolean,
/// strongest chains under fuzzy. Throws divergence_error on e.g. negative
/// cycles under min-plus.
matrix<semiring> shortest_paths(const graph_problem& problem);

} // namespace idem
