#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sgc/extend.hpp"
#include "sgc/fracture.hpp"
#include "sgc/sggi.hpp"

namespace sgc {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;        // complete tuples reaching the final filters
  std::uint64_t accepted_raw = 0;  // leaves passing order + string C checks
  std::uint64_t indeterminate_leaves = 0;
  std::uint64_t conj_duplicates = 0;   // should stay 0: canonicity guarantee
  std::uint64_t dual_duplicates = 0;
  std::uint64_t outer_duplicates = 0;  // degree 6 only
  std::map<std::string, std::uint64_t> prunes;

  void merge(const SearchStats& o);
};

struct ClassificationResult {
  unsigned degree = 0, rank = 0;
  std::vector<Sggi> representatives;
  bool complete = true;
  // Class count under conjugacy + duality only; representatives.size()
  // additionally folds the degree-6 outer automorphism.
  std::size_t count_inner = 0;
  SearchStats stats;

  std::size_t count() const { return representatives.size(); }
};

struct EnumerateOptions {
  unsigned workers = 1;
  std::uint64_t node_cap = 0;  // 0 = unlimited
  // Re-verify every impossibility prune by brute-force completion.
  // Only sensible on tiny instances; throws on a wrong prune.
  bool debug_recheck = false;
  unsigned max_degree = 9;
  IntersectConfig intersect;
};

// All string C-groups of the full symmetric group on n points with
// rank r, one representative per class under simultaneous conjugacy
// and duality (degree 6 also folds the outer automorphism). Requires
// 3 <= r and n <= opts.max_degree.
ClassificationResult enumerate_sggi(unsigned n, unsigned r,
                                    const EnumerateOptions& opts = {});

// No-pruning oracle: every involution tuple satisfying the string
// condition, filtered by group order and the brute-force intersection
// property, deduplicated the slow way. Exponential; degree <= 6 only.
ClassificationResult reference_enumerate(unsigned n, unsigned r,
                                         const EnumerateOptions& opts = {});

// Class count at corank kappa, i.e. rank n - kappa. Requires n - kappa >= 3.
std::size_t sigma(unsigned n, unsigned kappa,
                  const EnumerateOptions& opts = {});

// Labels of perfect splits where additionally alpha or beta is trivial.
struct PSet {
  std::vector<unsigned> labels;
};
PSet p_set(const Sggi& s);

struct EmptyInteriorPSet : Error {
  std::size_t representative;
  explicit EmptyInteriorPSet(std::size_t idx)
      : Error("representative " + std::to_string(idx) +
              " has no interior perfect split with a trivial side"),
        representative(idx) {}
};

// Rank-and-degree extension of every representative at the smallest
// interior label of its P-set; verifies the images stay pairwise
// inequivalent.
std::vector<Sggi> bijection_map(const ClassificationResult& result);

// Equivalence used everywhere above: simultaneous conjugacy against
// the other tuple or its dual, closed under the outer automorphism at
// degree 6.
bool equivalent_tuples(const Sggi& a, const Sggi& b);

// The outer automorphism of S_6 (fixed choice, built from the coset
// action on a transitive copy of the degree-5 projective group).
Perm s6_outer_image(const Perm& p);

}  // namespace sgc
