#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgc/perm.hpp"

// Permutation groups with a deterministic stabilizer chain (base and
// strong generating set). Base points are the first moved points in
// ascending order; transversals come from breadth-first orbit sweeps,
// so identical generator lists always produce identical chains.

namespace sgc {

class PermGroup {
 public:
  explicit PermGroup(unsigned degree = 0);
  PermGroup(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  U128 order() const;
  bool trivial() const { return levels_.empty(); }
  bool contains(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Orbit partition of the natural action, orbits sorted by minimum.
  std::vector<std::vector<unsigned>> orbits() const;
  unsigned orbit_count() const;
  bool transitive() const;  // one orbit covering every point
  std::vector<unsigned> orbit_of(unsigned point) const;

  // Enumerates every element exactly once, deterministic order.
  void for_each_element(const std::function<void(const Perm&)>& fn) const;
  std::vector<Perm> elements(std::uint64_t cap) const;

  // A small generating set extracted from the strong generators
  // (greedy: drop anything already generated).
  std::vector<Perm> reduced_generators() const;

  // Chain access for the backtrack searches.
  unsigned chain_length() const { return static_cast<unsigned>(levels_.size()); }
  unsigned base_point(unsigned level) const { return levels_[level].beta; }
  const std::vector<unsigned>& level_orbit(unsigned level) const {
    return levels_[level].orbit;
  }
  const Perm& transversal(unsigned level, unsigned point) const;
  bool in_level_orbit(unsigned level, unsigned point) const {
    return levels_[level].where[point] >= 0;
  }

  // Smallest moved point of any generator, degree() if none.
  unsigned first_moved() const;

 private:
  struct Level {
    unsigned beta = 0;
    std::vector<Perm> gens;        // strong generators introduced here
    std::vector<int> where;        // point -> orbit index, -1 outside
    std::vector<unsigned> orbit;   // BFS order, orbit[0] == beta
    std::vector<Perm> transversal; // u with beta^u = orbit[k]
  };

  void insert_generator(const Perm& g);
  void recompute_orbit(unsigned level);
  std::vector<const Perm*> gens_from(unsigned level) const;
  // Returns the residue and the level where sifting stopped.
  std::pair<Perm, unsigned> sift(Perm g, unsigned from_level) const;
  void close_chain();

  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

// Group identity per support (the moved points): Symmetric(m) or
// Alternating(m) when the action on the support is the full or even
// part, Other with an exact order otherwise. transitive/primitive
// refer to the natural action on all degree() points.
struct GroupIdentity {
  enum class Kind { Symmetric, Alternating, Other };
  Kind kind = Kind::Other;
  unsigned points = 0;  // support size for Symmetric/Alternating
  U128 order = 1;
  bool transitive = false;
  bool primitive = false;  // meaningful only when transitive
  std::string str() const;
};

GroupIdentity identify(const PermGroup& g);

// Greedy pass dropping generators already produced by the kept ones;
// the result generates the same group.
std::vector<Perm> reduce_generating_set(unsigned degree,
                                        const std::vector<Perm>& gens);

// Minimal block system containing {a,b} (Atkinson); block of a returned.
std::vector<unsigned> minimal_block(const PermGroup& g, unsigned a, unsigned b);
bool is_primitive(const PermGroup& g);

struct IntersectConfig {
  std::uint64_t enumeration_cap = 1000000;  // small-side closure limit
  std::uint64_t node_budget = 50000000;     // backtrack nodes before giving up
};

struct IntersectResult {
  std::optional<PermGroup> group;  // present unless indeterminate
  bool indeterminate = false;
  std::uint64_t nodes = 0;
};

// Exact G meet H; K, when given, must be a known subgroup of both.
IntersectResult intersection(const PermGroup& G, const PermGroup& H,
                             const IntersectConfig& cfg = {},
                             const PermGroup* seed = nullptr);

// Decides whether G meet H equals E (E must be a subgroup of both).
// Never wrong: Unknown only when the node budget runs out.
enum class MeetVerdict { Equal, NotEqual, Unknown };
struct MeetResult {
  MeetVerdict verdict = MeetVerdict::Unknown;
  std::optional<Perm> witness;  // an element of (G meet H) \ E
  std::uint64_t nodes = 0;
};
MeetResult meet_equals(const PermGroup& G, const PermGroup& H,
                       const PermGroup& E, const IntersectConfig& cfg = {});

// First permutation g (in backtrack order) with A_i^g = B_i for all i,
// searched over all of S_degree; nullopt when the tuples are not
// simultaneously conjugate. With an ambient group, the first solution
// lying inside it.
std::optional<Perm> tuple_conjugator(const std::vector<Perm>& A,
                                     const std::vector<Perm>& B);
std::optional<Perm> tuple_conjugator(const std::vector<Perm>& A,
                                     const std::vector<Perm>& B,
                                     const PermGroup& ambient);

}  // namespace sgc
