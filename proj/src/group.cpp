#include "sgc/group.hpp"

#include <algorithm>
#include <numeric>

namespace sgc {

PermGroup::PermGroup(unsigned degree) : degree_(degree) {}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  for (const Perm& g : gens_) insert_generator(g);
  close_chain();
}

std::vector<const Perm*> PermGroup::gens_from(unsigned level) const {
  std::vector<const Perm*> out;
  for (unsigned l = level; l < levels_.size(); ++l)
    for (const Perm& g : levels_[l].gens) out.push_back(&g);
  return out;
}

void PermGroup::recompute_orbit(unsigned level) {
  Level& lv = levels_[level];
  lv.where.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.beta);
  lv.where[lv.beta] = 0;
  lv.transversal.push_back(Perm(degree_));
  auto gens = gens_from(level);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    unsigned p = lv.orbit[k];
    for (const Perm* g : gens) {
      unsigned q = g->at(p);
      if (lv.where[q] < 0) {
        lv.where[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[k] * *g);
      }
    }
  }
}

std::pair<Perm, unsigned> PermGroup::sift(Perm g, unsigned from_level) const {
  for (unsigned l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    unsigned p = g.at(lv.beta);
    if (p == lv.beta) continue;
    if (lv.where[p] < 0) return {std::move(g), l};
    g = g * lv.transversal[lv.where[p]].inverse();
  }
  return {std::move(g), static_cast<unsigned>(levels_.size())};
}

void PermGroup::insert_generator(const Perm& g) {
  auto [h, l] = sift(g, 0);
  if (h.is_identity()) return;
  if (l == levels_.size()) {
    Level lv;
    lv.beta = h.support().front();
    levels_.push_back(std::move(lv));
  }
  levels_[l].gens.push_back(std::move(h));
  // The new strong generator enlarges every orbit at or above level l.
  for (unsigned k = 0; k <= l; ++k) recompute_orbit(k);
}

void PermGroup::close_chain() {
  // Verify every Schreier generator sifts to the identity; insert the
  // residues until a full pass is clean. On exit the chain is a BSGS.
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned l = 0; l < levels_.size() && !changed; ++l) {
      Level& lv = levels_[l];
      auto gens = gens_from(l);
      for (std::size_t k = 0; k < lv.orbit.size() && !changed; ++k) {
        for (const Perm* s : gens) {
          unsigned q = (*s).at(lv.orbit[k]);
          Perm schreier =
              lv.transversal[k] * *s * lv.transversal[lv.where[q]].inverse();
          auto [h, j] = sift(std::move(schreier), l + 1);
          if (h.is_identity()) continue;
          if (j == levels_.size()) {
            Level nl;
            nl.beta = h.support().front();
            levels_.push_back(std::move(nl));
          }
          levels_[j].gens.push_back(std::move(h));
          for (unsigned m = 0; m <= j; ++m) recompute_orbit(m);
          changed = true;
          break;
        }
      }
    }
  }
}

U128 PermGroup::order() const {
  U128 o = 1;
  for (const Level& lv : levels_) o *= lv.orbit.size();
  return o;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw Error("degree mismatch in membership");
  if (g.is_identity()) return true;
  auto [h, l] = sift(g, 0);
  (void)l;
  return h.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const Perm& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

const Perm& PermGroup::transversal(unsigned level, unsigned point) const {
  const Level& lv = levels_[level];
  return lv.transversal[lv.where[point]];
}

std::vector<std::vector<unsigned>> PermGroup::orbits() const {
  std::vector<int> root(degree_);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Perm& g : gens_)
    for (unsigned i = 0; i < degree_; ++i) {
      int a = find(static_cast<int>(i)), b = find(g.at(i));
      if (a != b) root[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<unsigned>> out;
  std::vector<int> index(degree_, -1);
  for (unsigned i = 0; i < degree_; ++i) {
    int r = find(static_cast<int>(i));
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(i);
  }
  return out;
}

unsigned PermGroup::orbit_count() const {
  return static_cast<unsigned>(orbits().size());
}

bool PermGroup::transitive() const {
  return degree_ > 0 && orbit_count() == 1;
}

std::vector<unsigned> PermGroup::orbit_of(unsigned point) const {
  std::vector<bool> in(degree_, false);
  std::vector<unsigned> orb{point};
  in[point] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const Perm& g : gens_) {
      unsigned q = g.at(orb[k]);
      if (!in[q]) {
        in[q] = true;
        orb.push_back(q);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

void PermGroup::for_each_element(
    const std::function<void(const Perm&)>& fn) const {
  // Elements factor uniquely as u_{L-1} * ... * u_1 * u_0 with u_l from
  // the level-l transversal (deeper factors applied first, so the image
  // of base point l is decided by u_l alone).
  std::function<void(int, Perm)> rec = [&](int level, Perm acc) {
    if (level < 0) {
      fn(acc);
      return;
    }
    for (const Perm& u : levels_[level].transversal) rec(level - 1, acc * u);
  };
  rec(static_cast<int>(levels_.size()) - 1, Perm(degree_));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw Error("group too large to enumerate");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order()));
  for_each_element([&](const Perm& p) { out.push_back(p); });
  return out;
}

std::vector<Perm> PermGroup::reduced_generators() const {
  std::vector<Perm> small;
  PermGroup k(degree_);
  U128 target = order();
  for (const Level& lv : levels_)
    for (const Perm& g : lv.gens) {
      if (k.order() == target) return small;
      if (k.contains(g)) continue;
      small.push_back(g);
      k = PermGroup(degree_, small);
    }
  return small;
}

std::vector<Perm> reduce_generating_set(unsigned degree,
                                        const std::vector<Perm>& gens) {
  std::vector<Perm> kept;
  PermGroup span(degree);
  for (const Perm& g : gens) {
    if (g.is_identity() || span.contains(g)) continue;
    kept.push_back(g);
    span = PermGroup(degree, kept);
  }
  return kept;
}

unsigned PermGroup::first_moved() const {
  unsigned best = degree_;
  for (const Perm& g : gens_) {
    auto s = g.support();
    if (!s.empty()) best = std::min(best, s.front());
  }
  return best;
}

// ============================================================
// identification
// ============================================================

std::string GroupIdentity::str() const {
  switch (kind) {
    case Kind::Symmetric:
      return "Symmetric(" + std::to_string(points) + ")";
    case Kind::Alternating:
      return "Alternating(" + std::to_string(points) + ")";
    case Kind::Other:
      return "Other, order " + u128_str(order);
  }
  return "?";
}

GroupIdentity identify(const PermGroup& g) {
  GroupIdentity id;
  id.order = g.order();
  id.transitive = g.transitive();
  if (id.transitive) id.primitive = is_primitive(g);

  std::vector<bool> moved(g.degree(), false);
  for (const Perm& p : g.generators())
    for (unsigned x : p.support()) moved[x] = true;
  std::vector<unsigned> support;
  for (unsigned i = 0; i < g.degree(); ++i)
    if (moved[i]) support.push_back(i);
  unsigned m = static_cast<unsigned>(support.size());
  if (m == 0) return id;  // trivial group: Other, order 1

  // Transitivity on the support.
  std::vector<unsigned> orb = g.orbit_of(support.front());
  if (orb.size() != m) return id;

  if (id.order == factorial(m)) {
    id.kind = GroupIdentity::Kind::Symmetric;
    id.points = m;
    return id;
  }
  if (m >= 3 && id.order == factorial(m) / 2) {
    bool all_even = true;
    for (const Perm& p : g.generators())
      if (!p.even()) all_even = false;
    if (all_even) {
      id.kind = GroupIdentity::Kind::Alternating;
      id.points = m;
    }
  }
  return id;
}

std::vector<unsigned> minimal_block(const PermGroup& g, unsigned a,
                                    unsigned b) {
  // Atkinson: refine the join of {a,b} under the generators.
  unsigned n = g.degree();
  std::vector<unsigned> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<unsigned(unsigned)> find = [&](unsigned x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](unsigned x, unsigned y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    root[std::max(x, y)] = std::min(x, y);
    return true;
  };
  std::vector<std::pair<unsigned, unsigned>> queue{{a, b}};
  unite(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& s : g.generators()) {
      unsigned sx = s.at(x), sy = s.at(y);
      if (unite(sx, sy)) queue.emplace_back(sx, sy);
    }
  }
  unsigned ra = find(a);
  std::vector<unsigned> block;
  for (unsigned i = 0; i < n; ++i)
    if (find(i) == ra) block.push_back(i);
  return block;
}

bool is_primitive(const PermGroup& g) {
  if (!g.transitive()) return false;
  unsigned n = g.degree();
  if (n <= 2) return true;
  for (unsigned b = 1; b < n; ++b) {
    auto block = minimal_block(g, 0, b);
    if (block.size() != 1 && block.size() != n) return false;
  }
  return true;
}

// ============================================================
// simultaneous conjugacy of generator tuples
// ============================================================

namespace {

// Map points one at a time; each assignment forces images along every
// tuple entry, so contradictions surface early.
struct ConjSearch {
  const std::vector<Perm>& A;
  const std::vector<Perm>& B;
  unsigned n;
  const PermGroup* ambient;
  std::vector<int> img, pre;
  std::optional<Perm> found;

  bool propagate(std::vector<std::pair<unsigned, unsigned>>& trail,
                 unsigned x, unsigned y) {
    if (img[x] >= 0) return img[x] == static_cast<int>(y);
    if (pre[y] >= 0) return false;
    img[x] = static_cast<int>(y);
    pre[y] = static_cast<int>(x);
    trail.emplace_back(x, y);
    for (std::size_t i = 0; i < A.size(); ++i)
      if (!propagate(trail, A[i].at(x), B[i].at(y))) return false;
    return true;
  }

  void undo(std::vector<std::pair<unsigned, unsigned>>& trail,
            std::size_t mark) {
    while (trail.size() > mark) {
      auto [x, y] = trail.back();
      trail.pop_back();
      img[x] = -1;
      pre[y] = -1;
    }
  }

  bool rec() {
    unsigned x = n;
    for (unsigned i = 0; i < n; ++i)
      if (img[i] < 0) {
        x = i;
        break;
      }
    if (x == n) {
      std::vector<std::uint8_t> v(n);
      for (unsigned i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(img[i]);
      Perm g = Perm::from_images(std::move(v));
      if (ambient && !ambient->contains(g)) return false;
      found = std::move(g);
      return true;
    }
    for (unsigned y = 0; y < n; ++y) {
      if (pre[y] >= 0) continue;
      std::vector<std::pair<unsigned, unsigned>> trail;
      if (propagate(trail, x, y)) {
        if (rec()) return true;
      }
      undo(trail, 0);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> tuple_conjugator(const std::vector<Perm>& A,
                                     const std::vector<Perm>& B) {
  if (A.size() != B.size()) return std::nullopt;
  if (A.empty()) return Perm(0);
  unsigned n = A.front().degree();
  for (const Perm& p : A)
    if (p.degree() != n) throw Error("tuple degree mismatch");
  for (const Perm& p : B)
    if (p.degree() != n) return std::nullopt;
  ConjSearch s{A, B, n, nullptr,
               std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  s.rec();
  return s.found;
}

std::optional<Perm> tuple_conjugator(const std::vector<Perm>& A,
                                     const std::vector<Perm>& B,
                                     const PermGroup& ambient) {
  if (A.size() != B.size()) return std::nullopt;
  if (A.empty()) return Perm(ambient.degree());
  unsigned n = A.front().degree();
  for (const Perm& p : A)
    if (!ambient.contains(p)) throw Error("tuple entry outside ambient group");
  for (const Perm& p : B)
    if (!ambient.contains(p)) throw Error("tuple entry outside ambient group");
  ConjSearch s{A, B, n, &ambient,
               std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  s.rec();
  return s.found;
}

}  // namespace sgc
