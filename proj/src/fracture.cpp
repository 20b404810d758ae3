#include "sgc/fracture.hpp"

#include <algorithm>

namespace sgc {

namespace {

// point -> orbit id under the parabolic dropping generator `drop`.
std::vector<int> parabolic_orbit_ids(const Sggi& s, unsigned drop,
                                     unsigned* orbit_count = nullptr) {
  std::vector<Perm> gens;
  for (unsigned j = 0; j < s.rank(); ++j)
    if (j != drop) gens.push_back(s.gens[j]);
  PermGroup gi(s.degree, gens);
  auto orbits = gi.orbits();
  std::vector<int> id(s.degree, -1);
  for (unsigned k = 0; k < orbits.size(); ++k)
    for (unsigned p : orbits[k]) id[p] = static_cast<int>(k);
  if (orbit_count) *orbit_count = static_cast<unsigned>(orbits.size());
  return id;
}

std::vector<Edge> crossing_edges(const Sggi& s, unsigned label,
                                 const std::vector<int>& ids) {
  std::vector<Edge> out;
  for (auto [a, b] : s.gens[label].transpositions())
    if (ids[a] != ids[b]) out.push_back(Edge{a, b, label});
  return out;
}

// Union-find over points for the acyclicity check.
struct Forest {
  std::vector<unsigned> parent;
  explicit Forest(unsigned n) : parent(n) {
    for (unsigned i = 0; i < n; ++i) parent[i] = i;
  }
  unsigned find(unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool pick_edges(const std::vector<std::vector<Edge>>& cands, unsigned label,
                Forest forest, std::vector<Edge>& chosen) {
  if (label == cands.size()) return true;
  for (const Edge& e : cands[label]) {
    Forest next = forest;
    if (!next.join(e.u, e.v)) continue;  // would close a cycle
    chosen.push_back(e);
    if (pick_edges(cands, label + 1, std::move(next), chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<FractureGraph> fracture_graph(const Sggi& s) {
  std::vector<std::vector<Edge>> cands(s.rank());
  for (unsigned i = 0; i < s.rank(); ++i) {
    cands[i] = crossing_edges(s, i, parabolic_orbit_ids(s, i));
    if (cands[i].empty()) return std::nullopt;
  }
  std::vector<Edge> chosen;
  if (!pick_edges(cands, 0, Forest(s.degree), chosen)) return std::nullopt;
  return FractureGraph{std::move(chosen)};
}

std::optional<std::vector<Edge>> two_fracture_graph(const Sggi& s) {
  std::vector<Edge> out;
  for (unsigned i = 0; i < s.rank(); ++i) {
    std::vector<Edge> c = crossing_edges(s, i, parabolic_orbit_ids(s, i));
    if (c.size() < 2) return std::nullopt;
    out.push_back(c[0]);
    out.push_back(c[1]);
  }
  return out;
}

bool valid_two_fracture_selection(const Sggi& s,
                                  const std::vector<Edge>& sel) {
  for (unsigned i = 0; i < s.rank(); ++i) {
    std::vector<Edge> here;
    for (const Edge& e : sel)
      if (e.label == i) here.push_back(e);
    if (here.size() != 2 || here[0] == here[1]) return false;
    std::vector<int> ids = parabolic_orbit_ids(s, i);
    for (const Edge& e : here) {
      unsigned lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      if (s.gens[i].at(lo) != hi) return false;  // not a cycle of rho_i
      if (ids[lo] == ids[hi]) return false;      // not crossing
    }
  }
  return sel.size() == 2u * s.rank();
}

std::vector<SplitReport> find_splits(const Sggi& s) {
  std::vector<SplitReport> out;
  unsigned n = s.degree;
  PermGroup g = group_of(s);
  unsigned full_orbits = g.orbit_count();

  for (unsigned i = 0; i < s.rank(); ++i) {
    unsigned sub_orbits = 0;
    std::vector<int> ids = parabolic_orbit_ids(s, i, &sub_orbits);
    if (sub_orbits != full_orbits + 1) continue;
    std::vector<Edge> crossing = crossing_edges(s, i, ids);
    if (crossing.size() != 1) continue;

    unsigned a0 = crossing[0].u, b0 = crossing[0].v;
    int idU = ids[a0], idV = ids[b0];

    // Which generators move each parabolic orbit.
    unsigned orbit_total = sub_orbits;
    std::vector<bool> lower(orbit_total, false), higher(orbit_total, false);
    for (unsigned j = 0; j < s.rank(); ++j) {
      if (j == i) continue;
      for (unsigned x = 0; x < n; ++x)
        if (s.gens[j].moves(x))
          (j < i ? lower : higher)[ids[x]] = true;
    }

    // Untouched orbits keep a fixed side under both orientations:
    // moved by a lower generator -> side 1, else by a higher -> side 2,
    // else side 2.
    std::vector<int> orbit_side(orbit_total, 0);  // 1 or 2
    bool assigned_higher_on_1 = false;
    for (unsigned k = 0; k < orbit_total; ++k) {
      if (static_cast<int>(k) == idU || static_cast<int>(k) == idV) continue;
      orbit_side[k] = lower[k] ? 1 : 2;
      if (orbit_side[k] == 1 && higher[k]) assigned_higher_on_1 = true;
    }

    // Orientation A: O_1 takes the a0-orbit; B swaps the crossed pair.
    bool perfA = !higher[idU] && !lower[idV] && !assigned_higher_on_1;
    bool perfB = !higher[idV] && !lower[idU] && !assigned_higher_on_1;

    unsigned minU = n, minV = n;
    for (unsigned x = 0; x < n; ++x) {
      if (ids[x] == idU) minU = std::min(minU, x);
      if (ids[x] == idV) minV = std::min(minV, x);
    }
    bool u_first;
    if (perfA != perfB)
      u_first = perfA;
    else
      u_first = minU < minV;

    SplitReport r;
    r.label = i;
    r.perfect = perfA || perfB;
    int id1 = u_first ? idU : idV;
    int id2 = u_first ? idV : idU;
    r.a = u_first ? a0 : b0;
    r.b = u_first ? b0 : a0;
    for (unsigned x = 0; x < n; ++x) {
      bool one = ids[x] == id1 || (ids[x] != id2 && orbit_side[ids[x]] == 1);
      (one ? r.side1 : r.side2).push_back(x);
    }

    std::vector<bool> in_side1(n, false);
    for (unsigned x : r.side1) in_side1[x] = true;
    std::vector<std::uint8_t> ia(n), ib(n);
    for (unsigned x = 0; x < n; ++x) ia[x] = ib[x] = static_cast<std::uint8_t>(x);
    for (auto [x, y] : s.gens[i].transpositions()) {
      if (x == a0 && y == b0) continue;  // the crossing pair
      if (in_side1[x])
        std::swap(ia[x], ia[y]);
      else
        std::swap(ib[x], ib[y]);
    }
    r.alpha = Perm::from_images(std::move(ia));
    r.beta = Perm::from_images(std::move(ib));

    for (unsigned j = 0; j < s.rank(); ++j) {
      if (j == i) continue;
      bool on1 = false, on2 = false;
      for (unsigned x = 0; x < n; ++x)
        if (s.gens[j].moves(x)) (in_side1[x] ? on1 : on2) = true;
      if (on1) r.J_A.push_back(j);
      if (on2) r.J_B.push_back(j);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string split_json(const SplitReport& r) {
  auto list = [](const std::vector<unsigned>& v, bool one_based) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(v[k] + (one_based ? 1 : 0));
    }
    return s + "]";
  };
  std::string s = "{";
  s += "\"label\":" + std::to_string(r.label);
  s += ",\"pair\":[" + std::to_string(r.a + 1) + "," +
       std::to_string(r.b + 1) + "]";
  s += ",\"n_1\":" + std::to_string(r.side1.size());
  s += ",\"n_2\":" + std::to_string(r.side2.size());
  s += ",\"perfect\":" + std::string(r.perfect ? "true" : "false");
  s += ",\"J_A\":" + list(r.J_A, false);
  s += ",\"J_B\":" + list(r.J_B, false);
  s += "}";
  return s;
}

AttachReport is_split_attachable(const Sggi& s, const IntersectConfig& cfg) {
  AttachReport rep;
  unsigned r = s.rank();
  if (r == 0) return rep;
  PermRepGraph g = graph_of(s);
  std::vector<unsigned> degree_of(s.degree, 0);
  for (const Edge& e : g.edges) {
    ++degree_of[e.u];
    ++degree_of[e.v];
  }
  // Pendant vertices whose single incident edge carries the label.
  auto pendants = [&](unsigned label) {
    std::vector<unsigned> out;
    for (const Edge& e : g.edges)
      if (e.label == label) {
        if (degree_of[e.u] == 1) out.push_back(e.u);
        if (degree_of[e.v] == 1) out.push_back(e.v);
      }
    std::sort(out.begin(), out.end());
    return out;
  };

  unsigned n = s.degree, c = n;
  auto try_attach = [&](unsigned p, bool at_front) -> bool {
    std::vector<Perm> gens;
    if (at_front) gens.push_back(Perm::transposition(n + 1, p, c));
    for (const Perm& q : s.gens) gens.push_back(q.lifted(n + 1));
    if (!at_front) gens.push_back(Perm::transposition(n + 1, p, c));
    Sggi ext;
    try {
      ext = make_sggi(n + 1, std::move(gens));
    } catch (const Error&) {
      return false;
    }
    CVerdict v = is_string_cgroup(ext, cfg);
    if (v.value == Tri::Indeterminate) {
      rep.indeterminate = true;
      return false;
    }
    if (v.value != Tri::True) return false;
    unsigned new_label = at_front ? 0 : r;
    for (const SplitReport& sr : find_splits(ext))
      if (sr.label == new_label && sr.perfect) {
        rep.attachable = true;
        rep.witness = std::move(ext);
        rep.attach_label = new_label;
        return true;
      }
    return false;
  };

  for (unsigned p : pendants(0))
    if (try_attach(p, true)) return rep;
  for (unsigned p : pendants(r - 1))
    if (try_attach(p, false)) return rep;
  return rep;
}

}  // namespace sgc
