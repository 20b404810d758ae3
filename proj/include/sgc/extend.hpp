#pragma once

#include "sgc/fracture.hpp"
#include "sgc/sggi.hpp"

namespace sgc {

struct TauNotInvolution : Error {
  TauNotInvolution() : Error("tau is not an involution") {}
};
struct TauNotCommuting : Error {
  unsigned index;
  explicit TauNotCommuting(unsigned i)
      : Error("tau does not commute with generator " + std::to_string(i)),
        index(i) {}
};
struct TauInGroup : Error {
  TauInGroup() : Error("tau already lies in the group") {}
};
struct NotAPerfectSplit : Error {
  unsigned label;
  explicit NotAPerfectSplit(unsigned i)
      : Error("label " + std::to_string(i) + " is not a perfect split"),
        label(i) {}
};

enum class SesquiKind { Proper, Improper };

struct SesquiResult {
  Sggi extended;
  Perm tau;  // on the reconciled degree
  SesquiKind kind;
};

// Multiply generator k by a commuting outside involution tau. tau may
// live on a larger domain; the base tuple is lifted with fixed points.
// Proper exactly when tau lands inside the extended group (then the
// group doubles); improper when the extended group is a plain copy.
SesquiResult sesqui_extend(const Sggi& s, unsigned k, const Perm& tau);

struct RdExtension {
  Sggi source;
  unsigned split_label = 0;
  unsigned new_point = 0;  // 0-based; always the added top point
  Sggi result;             // degree + 1, rank + 1
};

// Insert a new point c into a perfect i-split {a,b}: generator i
// becomes alpha*(a,c) followed by beta*(c,b), later generators shift
// up one label.
RdExtension rd_extend(const Sggi& s, unsigned i);

enum class RdGuard { GuaranteedStringC, NoGuarantee };

// Sufficient conditions under which the extension is known to stay a
// string C-group: a fracture graph exists, neither a nor b is a global
// fixed point of the parabolic dropping i, and alpha or beta is
// trivial. NoGuarantee still allows rd_extend; the verdict then comes
// from the string C check on the result.
RdGuard rd_guard(const Sggi& s, unsigned i);

}  // namespace sgc
