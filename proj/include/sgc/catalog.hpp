#pragma once

#include <map>
#include <optional>

#include "sgc/fracture.hpp"
#include "sgc/group.hpp"
#include "sgc/reps.hpp"

namespace sgc {

// Expected order of the intersection of two maximal parabolics, and of
// the parabolic dropping both labels. Used by entries whose point is
// precisely that those two differ.
struct MeetClaim {
  unsigned i = 0, j = 0;
  std::optional<U128> meet_order;   // |G_i cap G_j|
  std::optional<U128> joint_order;  // |G_{i,j}|
};

// What a catalog entry asserts about itself. Optional fields are only
// checked when set; informational flags downgrade a failed check to a
// report line that does not fail the entry.
struct CatalogClaims {
  std::optional<bool> string_c;
  bool string_c_informational = false;
  std::optional<GroupIdentity::Kind> kind;
  unsigned kind_points = 0;
  bool kind_informational = false;
  std::optional<U128> order;
  std::optional<bool> transitive;
  std::optional<bool> primitive;
  std::optional<bool> attachable;
  bool non_perfect_split = false;  // requires a split, none perfect
  std::map<unsigned, U128> parabolic_orders;  // dropped label -> order
  std::optional<MeetClaim> meet;
  std::vector<Edge> two_fracture;  // nonempty: stored selection to check
  std::string notes;  // transcription caveats, shown in reports
};

struct CatalogEntry {
  std::string id;
  PermRepGraph graph;
  CatalogClaims claims;
};

// Fixed-order ids of every instantiation shipped with the library.
const std::vector<std::string>& catalog_ids();

// Entry by id, e.g. "T2.1", "IPF.5b", "T5.11@n=9", "T6.XVI@r=6,h=4,k=1".
// Throws Error on an unknown id or out-of-range parameters.
CatalogEntry instantiate(const std::string& id);

const std::vector<CatalogEntry>& instantiate_all();

// '*' and '?' wildcards, case-sensitive, anchored at both ends.
bool glob_match(const std::string& pattern, const std::string& text);

std::vector<CatalogEntry> catalog_match(const std::string& pattern);

enum class CheckStatus { Pass, Fail, Indeterminate, Info };

struct ClaimCheck {
  std::string what;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

// pass means no required claim failed; indeterminate means some check
// hit a resource cap before deciding.
struct CatalogReport {
  std::string id;
  bool pass = true;
  bool indeterminate = false;
  std::vector<ClaimCheck> checks;
};

// Recomputes every claim of the entry from scratch and reports each as
// its own line. Informational claims can only produce Info lines.
CatalogReport verify_entry(const CatalogEntry& e,
                           const IntersectConfig& cfg = {});

// Filesystem-safe stem for an id: '@' -> '_', '=' removed, ',' -> '_'.
std::string catalog_file_stem(const std::string& id);

// Shipped per-entry graph file: a '#' comment naming the id, then the
// graph DSL. The dump command writes exactly this string.
std::string catalog_file_content(const CatalogEntry& e);

// The shipped claims manifest: one JSON object listing every entry in
// catalog order with its file name and claims. Byte-deterministic.
std::string catalog_manifest_json();

}  // namespace sgc
