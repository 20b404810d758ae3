#pragma once

#include <optional>

#include "sgc/reps.hpp"

namespace sgc {

// One orbit-crossing transposition per label; always a forest.
struct FractureGraph {
  std::vector<Edge> edges;  // sorted by label, exactly rank of them
};

// Canonical choice: labels ascending, lexicographically least crossing
// transposition that keeps the partial selection acyclic (backtracking
// if that ever fails). nullopt when some maximal parabolic gains no
// orbit over the full group.
std::optional<FractureGraph> fracture_graph(const Sggi& s);

// Two distinct crossing transpositions per label (2r edges, cycles
// allowed); the two lex-least candidates per label.
std::optional<std::vector<Edge>> two_fracture_graph(const Sggi& s);

// Checks a stored selection: exactly two distinct edges per label,
// each a transposition of its generator crossing two orbits of the
// corresponding maximal parabolic.
bool valid_two_fracture_selection(const Sggi& s, const std::vector<Edge>& sel);

// A label i where the parabolic dropping generator i has exactly one
// more orbit than the full group and exactly one transposition of
// rho_i crosses the two halves. O_1/O_2 partition every point; alpha
// and beta collect the non-crossing action of rho_i per side.
struct SplitReport {
  unsigned label = 0;
  unsigned a = 0, b = 0;  // crossing pair, a on the O_1 side
  std::vector<unsigned> side1, side2;  // sorted point sets
  Perm alpha, beta;                    // on the full degree
  std::vector<unsigned> J_A, J_B;  // generators != label moving each side
  bool perfect = false;
};

// All splits, labels ascending. A split is perfect when some
// orientation puts every lower-index generator's action on the O_1
// side and every higher-index generator's on O_2; the report stores a
// perfect-witnessing orientation when one exists, otherwise O_1 is the
// crossed orbit with the smaller minimum point. Orbits untouched by
// the split go to O_1 if a lower generator moves them, to O_2 if a
// higher one does, to O_2 by default.
std::vector<SplitReport> find_splits(const Sggi& s);

std::string split_json(const SplitReport& r);

struct AttachReport {
  bool attachable = false;
  std::optional<Sggi> witness;  // the extended string C-group
  unsigned attach_label = 0;    // extreme label of the new edge
  bool indeterminate = false;   // a candidate check hit the resource cap
};

// Whether adding one point at a pendant extreme-label edge, joined by
// a new extreme-label transposition, produces a string C-group with a
// perfect split at the new label. Tries pendant 0-edges (vertices
// ascending), then pendant top-label edges.
AttachReport is_split_attachable(const Sggi& s,
                                 const IntersectConfig& cfg = {});

}  // namespace sgc
