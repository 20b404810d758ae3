#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sgc/sggi.hpp"

namespace sgc {

// Labeled undirected edge of a permutation representation graph.
// Vertices are 0-based internally; the DSL and DOT forms are 1-based.
// Ordering (and hence every serialized form) sorts by label first.
struct Edge {
  unsigned u = 0, v = 0, label = 0;

  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct PermRepGraph {
  unsigned degree = 0;
  unsigned rank = 0;
  std::vector<Edge> edges;
};

struct MatchingViolation : Error {
  unsigned label;
  explicit MatchingViolation(unsigned l);
};

struct SquareViolation : Error {
  unsigned i, j;
  std::vector<unsigned> component;  // offending vertices, 0-based
  SquareViolation(unsigned i_, unsigned j_, std::vector<unsigned> comp);
};

// Canonical form: u < v per edge, edges sorted, rank = max label + 1.
PermRepGraph make_graph(unsigned degree, std::vector<Edge> edges);

// The two sggi-graph conditions: per-label edges form a matching, and
// every component of a two-label subgraph with label gap >= 2 is a
// vertex, an edge, a double edge, or an alternating square.
void validate_graph(const PermRepGraph& g);

PermRepGraph graph_of(const Sggi& s);

// Inverse direction; degree (when nonzero) embeds the graph into a
// larger point set with trailing fixed points.
Sggi sggi_of(const PermRepGraph& g, unsigned degree = 0);

// DSL: "degree <n>" then "edge <u> <v> <label>" lines, '#' comments.
PermRepGraph parse_dsl(const std::string& text);
std::string print_dsl(const PermRepGraph& g);

// Deterministic DOT (graph { ... } with -- edges and label attributes;
// double edges appear as parallel edges), and a reader for exactly
// that subset, used by the round-trip tests.
std::string export_dot(const PermRepGraph& g);
PermRepGraph parse_dot_subset(const std::string& text);

}  // namespace sgc
