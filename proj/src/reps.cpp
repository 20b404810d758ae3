#include "sgc/reps.hpp"

#include <algorithm>
#include <sstream>

namespace sgc {

MatchingViolation::MatchingViolation(unsigned l)
    : Error("label " + std::to_string(l) + " edges are not a matching"),
      label(l) {}

namespace {

std::string join_vertices(const std::vector<unsigned>& vs) {
  std::string out;
  for (unsigned v : vs) {
    if (!out.empty()) out += ",";
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

SquareViolation::SquareViolation(unsigned i_, unsigned j_,
                                 std::vector<unsigned> comp)
    : Error("labels " + std::to_string(i_) + "," + std::to_string(j_) +
            " form a bad component on vertices {" + join_vertices(comp) + "}"),
      i(i_),
      j(j_),
      component(std::move(comp)) {}

PermRepGraph make_graph(unsigned degree, std::vector<Edge> edges) {
  PermRepGraph g;
  g.degree = degree;
  for (Edge e : edges) {
    if (e.u == e.v) throw Error("loop edge at vertex " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= degree)
      throw Error("edge vertex " + std::to_string(e.v + 1) +
                  " exceeds degree " + std::to_string(degree));
    g.edges.push_back(e);
    g.rank = std::max(g.rank, e.label + 1);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (std::size_t k = 1; k < g.edges.size(); ++k)
    if (g.edges[k] == g.edges[k - 1])
      throw Error("duplicate edge " + std::to_string(g.edges[k].u + 1) + " " +
                  std::to_string(g.edges[k].v + 1) + " label " +
                  std::to_string(g.edges[k].label));
  return g;
}

void validate_graph(const PermRepGraph& g) {
  // Matching condition per label.
  for (unsigned l = 0; l < g.rank; ++l) {
    std::vector<bool> used(g.degree, false);
    for (const Edge& e : g.edges) {
      if (e.label != l) continue;
      if (used[e.u] || used[e.v]) throw MatchingViolation(l);
      used[e.u] = used[e.v] = true;
    }
  }
  // Square condition for each label pair with gap >= 2.
  for (unsigned i = 0; i + 2 <= g.rank; ++i)
    for (unsigned j = i + 2; j < g.rank; ++j) {
      std::vector<std::vector<unsigned>> adj(g.degree);
      for (const Edge& e : g.edges)
        if (e.label == i || e.label == j) {
          adj[e.u].push_back(e.v);
          adj[e.v].push_back(e.u);
        }
      std::vector<bool> seen(g.degree, false);
      for (unsigned start = 0; start < g.degree; ++start) {
        if (seen[start] || adj[start].empty()) continue;
        std::vector<unsigned> comp{start};
        seen[start] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
          for (unsigned w : adj[comp[k]])
            if (!seen[w]) {
              seen[w] = true;
              comp.push_back(w);
            }
        std::size_t ecount = 0;
        for (const Edge& e : g.edges)
          if ((e.label == i || e.label == j) &&
              std::find(comp.begin(), comp.end(), e.u) != comp.end())
            ++ecount;
        bool ok = ecount <= 1 || (ecount == 2 && comp.size() == 2) ||
                  (ecount == 4 && comp.size() == 4);
        if (!ok) {
          std::sort(comp.begin(), comp.end());
          throw SquareViolation(i, j, comp);
        }
      }
    }
}

PermRepGraph graph_of(const Sggi& s) {
  std::vector<Edge> edges;
  for (unsigned i = 0; i < s.rank(); ++i)
    for (auto [a, b] : s.gens[i].transpositions())
      edges.push_back(Edge{a, b, i});
  PermRepGraph g = make_graph(s.degree, std::move(edges));
  g.rank = s.rank();  // keep declared rank even if trailing labels are unused
  return g;
}

Sggi sggi_of(const PermRepGraph& g, unsigned degree) {
  validate_graph(g);
  unsigned n = std::max(g.degree, degree);
  std::vector<Perm> gens;
  for (unsigned l = 0; l < g.rank; ++l) {
    std::vector<std::uint8_t> img(n);
    for (unsigned x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
    for (const Edge& e : g.edges)
      if (e.label == l) std::swap(img[e.u], img[e.v]);
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return make_sggi(n, std::move(gens));
}

PermRepGraph parse_dsl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_degree = false;
  unsigned degree = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (!have_degree) {
      long n = 0;
      if (word != "degree" || !(ls >> n) || n < 1 || n > 255)
        throw ParseError(lineno, "expected 'degree <n>'");
      degree = static_cast<unsigned>(n);
      have_degree = true;
      continue;
    }
    if (word != "edge") throw ParseError(lineno, "expected 'edge <u> <v> <label>'");
    long u = 0, v = 0, l = 0;
    if (!(ls >> u >> v >> l) || u < 1 || v < 1 || l < 0)
      throw ParseError(lineno, "expected 'edge <u> <v> <label>'");
    if (u == v) throw ParseError(lineno, "loop edge");
    if (static_cast<unsigned long>(u) > degree ||
        static_cast<unsigned long>(v) > degree)
      throw ParseError(lineno, "vertex out of range");
    edges.push_back(Edge{static_cast<unsigned>(u - 1),
                         static_cast<unsigned>(v - 1),
                         static_cast<unsigned>(l)});
  }
  if (!have_degree) throw ParseError(lineno, "missing 'degree <n>' header");
  PermRepGraph g;
  try {
    g = make_graph(degree, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
  validate_graph(g);
  return g;
}

std::string print_dsl(const PermRepGraph& g) {
  std::string out = "degree " + std::to_string(g.degree) + "\n";
  for (const Edge& e : g.edges)
    out += "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
           " " + std::to_string(e.label) + "\n";
  return out;
}

std::string export_dot(const PermRepGraph& g) {
  std::string out = "graph {\n";
  for (unsigned v = 0; v < g.degree; ++v)
    out += "  " + std::to_string(v + 1) + ";\n";
  for (const Edge& e : g.edges)
    out += "  " + std::to_string(e.u + 1) + " -- " + std::to_string(e.v + 1) +
           " [label=" + std::to_string(e.label) + "];\n";
  out += "}\n";
  return out;
}

PermRepGraph parse_dot_subset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool open = false, closed = false;
  unsigned max_vertex = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!open) {
      if (first != "graph") throw ParseError(lineno, "expected 'graph {'");
      std::string brace;
      ls >> brace;
      if (brace != "{") throw ParseError(lineno, "expected 'graph {'");
      open = true;
      continue;
    }
    if (first == "}") {
      closed = true;
      break;
    }
    // Either "<u>;" or "<u> -- <v> [label=<l>];"
    std::string rest;
    std::getline(ls, rest);
    if (first.back() == ';') {
      unsigned u = static_cast<unsigned>(
          std::stoul(first.substr(0, first.size() - 1)));
      max_vertex = std::max(max_vertex, u);
      continue;
    }
    unsigned u = static_cast<unsigned>(std::stoul(first));
    std::istringstream rs(rest);
    std::string dashes, vtok, attr;
    if (!(rs >> dashes >> vtok >> attr) || dashes != "--")
      throw ParseError(lineno, "expected '<u> -- <v> [label=<l>];'");
    unsigned v = static_cast<unsigned>(std::stoul(vtok));
    std::size_t eq = attr.find("label=");
    std::size_t close = attr.find(']');
    if (eq == std::string::npos || close == std::string::npos)
      throw ParseError(lineno, "expected '[label=<l>]'");
    unsigned l = static_cast<unsigned>(
        std::stoul(attr.substr(eq + 6, close - eq - 6)));
    max_vertex = std::max({max_vertex, u, v});
    edges.push_back(Edge{u - 1, v - 1, l});
  }
  if (!open || !closed) throw ParseError(lineno, "unterminated graph block");
  return make_graph(max_vertex, std::move(edges));
}

}  // namespace sgc
