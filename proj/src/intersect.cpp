#include <algorithm>
#include <unordered_set>

#include "sgc/group.hpp"

// Exact subgroup intersection. Small problems enumerate the smaller
// group and filter by membership in the other. Large ones run a
// backtrack over G's stabilizer chain: a branch fixes the images of
// G's base points one level at a time, keeps an element of H realizing
// the images chosen so far (so branches H cannot realize are cut), and
// explores only the lexicographically least image tuple of each right
// coset of the already-known subgroup K, which keeps the leaf count
// near the number of K-cosets instead of the number of elements.

namespace sgc {

namespace {

struct OrbitData {
  std::vector<int> where;       // point -> index or -1
  std::vector<unsigned> pts;    // BFS order
  std::vector<Perm> trans;      // u with start^u = pts[k]
};

OrbitData orbit_trans(unsigned start, const std::vector<Perm>& gens,
                      unsigned degree) {
  OrbitData od;
  od.where.assign(degree, -1);
  od.pts.push_back(start);
  od.where[start] = 0;
  od.trans.push_back(Perm(degree));
  for (std::size_t k = 0; k < od.pts.size(); ++k)
    for (const Perm& g : gens) {
      unsigned q = g.at(od.pts[k]);
      if (od.where[q] < 0) {
        od.where[q] = static_cast<int>(od.pts.size());
        od.pts.push_back(q);
        od.trans.push_back(od.trans[k] * g);
      }
    }
  return od;
}

unsigned orbit_min(unsigned start, const std::vector<Perm>& gens,
                   unsigned degree) {
  std::vector<bool> in(degree, false);
  std::vector<unsigned> stack{start};
  in[start] = true;
  unsigned best = start;
  while (!stack.empty()) {
    unsigned p = stack.back();
    stack.pop_back();
    best = std::min(best, p);
    for (const Perm& g : gens) {
      unsigned q = g.at(p);
      if (!in[q]) {
        in[q] = true;
        stack.push_back(q);
      }
    }
  }
  return best;
}

// Generators of the stabilizer of pt inside <gens> (Schreier's lemma),
// compressed when the raw list gets long.
std::vector<Perm> stabilizer_gens(unsigned pt, const std::vector<Perm>& gens,
                                  unsigned degree) {
  OrbitData od = orbit_trans(pt, gens, degree);
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (std::size_t k = 0; k < od.pts.size(); ++k)
    for (const Perm& g : gens) {
      unsigned q = g.at(od.pts[k]);
      Perm schreier = od.trans[k] * g * od.trans[od.where[q]].inverse();
      if (schreier.is_identity()) continue;
      if (seen.insert(schreier).second) out.push_back(std::move(schreier));
    }
  if (out.size() > 48) out = reduce_generating_set(degree, out);
  return out;
}

struct Engine {
  const PermGroup& G;
  const PermGroup& H;
  Engine(const PermGroup& g, const PermGroup& h) : G(g), H(h) {}
  const PermGroup* stop_outside = nullptr;  // equality mode: E
  const PermGroup* known = nullptr;         // K for coset pruning
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::optional<Perm> found;  // leaf in (G meet H) outside `known`

  bool dfs(unsigned level, const Perm& gcur, const Perm& h0,
           const std::vector<Perm>& hstab, const std::vector<Perm>& kstab) {
    if (++nodes > budget) {
      budget_hit = true;
      return true;
    }
    unsigned degree = G.degree();
    if (level == G.chain_length()) {
      if (!H.contains(gcur)) return false;
      const PermGroup* skip = stop_outside ? stop_outside : known;
      if (skip && skip->contains(gcur)) return false;
      found = gcur;
      return true;
    }
    unsigned b = G.base_point(level);
    OrbitData hod = orbit_trans(h0.at(b), hstab, degree);

    std::vector<std::pair<unsigned, unsigned>> cands;  // (image a, orbit pt q)
    for (unsigned q : G.level_orbit(level)) {
      unsigned a = gcur.at(q);
      if (hod.where[a] < 0) continue;
      if (orbit_min(a, kstab, degree) != a) continue;
      cands.emplace_back(a, q);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [a, q] : cands) {
      Perm gnext = G.transversal(level, q) * gcur;
      Perm hnext = h0 * hod.trans[hod.where[a]];
      if (dfs(level + 1, gnext, hnext, stabilizer_gens(a, hstab, degree),
              stabilizer_gens(a, kstab, degree)))
        return true;
    }
    return false;
  }

  void run() {
    found.reset();
    unsigned degree = G.degree();
    std::vector<Perm> hstab = reduce_generating_set(degree, H.generators());
    const PermGroup* k = stop_outside ? stop_outside : known;
    std::vector<Perm> kstab =
        k ? reduce_generating_set(degree, k->generators()) : std::vector<Perm>{};
    dfs(0, Perm(degree), Perm(degree), hstab, kstab);
  }
};

}  // namespace

MeetResult meet_equals(const PermGroup& G, const PermGroup& H,
                       const PermGroup& E, const IntersectConfig& cfg) {
  MeetResult res;
  U128 eo = E.order();
  U128 go = G.order(), ho = H.order();
  // E <= G meet H <= the smaller of the two.
  if (eo == go || eo == ho) {
    res.verdict = MeetVerdict::Equal;
    return res;
  }
  if (G.is_subgroup_of(H)) {
    res.verdict = go == eo ? MeetVerdict::Equal : MeetVerdict::NotEqual;
    return res;
  }
  if (H.is_subgroup_of(G)) {
    res.verdict = ho == eo ? MeetVerdict::Equal : MeetVerdict::NotEqual;
    return res;
  }
  const PermGroup& small = go <= ho ? G : H;
  const PermGroup& large = go <= ho ? H : G;
  if (std::min(go, ho) <= 10000) {
    bool outside = false;
    Perm w;
    small.for_each_element([&](const Perm& e) {
      if (outside) return;
      if (!E.contains(e) && large.contains(e)) {
        outside = true;
        w = e;
      }
    });
    res.verdict = outside ? MeetVerdict::NotEqual : MeetVerdict::Equal;
    if (outside) res.witness = w;
    return res;
  }
  Engine eng{small, large};
  eng.stop_outside = &E;
  eng.budget = cfg.node_budget;
  eng.run();
  res.nodes = eng.nodes;
  if (eng.budget_hit) return res;  // Unknown
  if (eng.found) {
    res.verdict = MeetVerdict::NotEqual;
    res.witness = eng.found;
  } else {
    res.verdict = MeetVerdict::Equal;
  }
  return res;
}

IntersectResult intersection(const PermGroup& G, const PermGroup& H,
                             const IntersectConfig& cfg,
                             const PermGroup* seed) {
  if (G.degree() != H.degree()) throw Error("degree mismatch in intersection");
  IntersectResult res;
  unsigned degree = G.degree();
  if (G.is_subgroup_of(H)) {
    res.group = G;
    return res;
  }
  if (H.is_subgroup_of(G)) {
    res.group = H;
    return res;
  }
  const PermGroup& small = G.order() <= H.order() ? G : H;
  const PermGroup& large = G.order() <= H.order() ? H : G;

  std::vector<Perm> kgens;
  if (seed) kgens = seed->generators();
  PermGroup k(degree, kgens);

  if (small.order() <= cfg.enumeration_cap) {
    small.for_each_element([&](const Perm& e) {
      if (k.contains(e)) return;
      if (!large.contains(e)) return;
      kgens.push_back(e);
      k = PermGroup(degree, kgens);
    });
    res.group = std::move(k);
    return res;
  }

  Engine eng{small, large};
  eng.budget = cfg.node_budget;
  while (true) {
    eng.known = &k;
    eng.run();
    if (eng.budget_hit) {
      res.indeterminate = true;
      res.nodes = eng.nodes;
      return res;
    }
    if (!eng.found) break;
    kgens.push_back(*eng.found);
    k = PermGroup(degree, kgens);
  }
  res.nodes = eng.nodes;
  res.group = std::move(k);
  return res;
}

}  // namespace sgc
