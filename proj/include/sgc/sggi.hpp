#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgc/group.hpp"
#include "sgc/perm.hpp"

namespace sgc {

// Ordered tuple of involutions where non-adjacent generators commute.
// Construct through make_sggi; the checks there are the only thing
// separating this from a plain vector of permutations.
struct Sggi {
  unsigned degree = 0;
  std::vector<Perm> gens;

  unsigned rank() const { return static_cast<unsigned>(gens.size()); }
};

struct NotInvolution : Error {
  unsigned index;
  explicit NotInvolution(unsigned i);
};

struct StringConditionFails : Error {
  unsigned i, j;
  StringConditionFails(unsigned a, unsigned b);
};

Sggi make_sggi(unsigned degree, std::vector<Perm> gens);

// Generator tuple reversed, degree unchanged.
Sggi dual(const Sggi& s);

// Sub-tuple keeping exactly the generators whose index is in J.
Sggi parabolic_select(const Sggi& s, const std::vector<unsigned>& J);
// Sub-tuple dropping the generators whose index is in J.
Sggi parabolic_delete(const Sggi& s, const std::vector<unsigned>& J);

// Orders of adjacent products rho_{i-1} rho_i. Requires rank >= 2.
std::vector<unsigned> schlafli(const Sggi& s);

PermGroup group_of(const Sggi& s);

enum class Tri { True, False, Indeterminate };

// Why an intersection-property check failed: two index sets whose
// parabolic meet is larger than the parabolic of their intersection.
struct CWitness {
  std::vector<unsigned> J, K;
  U128 expected_order = 0;  // |<rho_j : j in J meet K>|
  U128 actual_order = 0;    // |G_J meet G_K|, or 0 when not computed
};

struct CVerdict {
  Tri value = Tri::Indeterminate;
  std::optional<CWitness> witness;  // present iff value == False

  bool ok() const { return value == Tri::True; }
};

// Recursive string C-group test: both extreme maximal parabolics must
// pass, and their groups must meet in the shared parabolic. Memoized
// on the support-restricted generator tuple, so shifted copies of the
// same abstract tuple share cache entries. Resource-capped meet checks
// surface as Indeterminate, never as a wrong boolean.
CVerdict is_string_cgroup(const Sggi& s,
                          const IntersectConfig& cfg = IntersectConfig{});

// Oracle variant checking every pair of index subsets directly.
// Requires rank <= 7.
CVerdict intersection_property_bruteforce(
    const Sggi& s, const IntersectConfig& cfg = IntersectConfig{});

// Text form: "degree <n>" then one cycle-notation generator per line.
// Blank lines and lines starting with '#' are skipped.
Sggi parse_sggi_text(const std::string& text);
std::string print_sggi_text(const Sggi& s);

}  // namespace sgc
