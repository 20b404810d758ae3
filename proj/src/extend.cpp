#include "sgc/extend.hpp"

#include <algorithm>

namespace sgc {

SesquiResult sesqui_extend(const Sggi& s, unsigned k, const Perm& tau) {
  if (k >= s.rank()) throw Error("sesqui index out of range");
  unsigned n = std::max(s.degree, tau.degree());
  Perm t = tau.lifted(n);
  if (!t.is_involution()) throw TauNotInvolution();
  std::vector<Perm> gens;
  gens.reserve(s.rank());
  for (const Perm& g : s.gens) gens.push_back(g.lifted(n));
  for (unsigned j = 0; j < gens.size(); ++j)
    if (gens[j] * t != t * gens[j]) throw TauNotCommuting(j);
  if (PermGroup(n, gens).contains(t)) throw TauInGroup();

  gens[k] = gens[k] * t;
  SesquiResult res{make_sggi(n, std::move(gens)), t, SesquiKind::Improper};
  if (group_of(res.extended).contains(t)) res.kind = SesquiKind::Proper;
  return res;
}

RdExtension rd_extend(const Sggi& s, unsigned i) {
  const SplitReport* split = nullptr;
  std::vector<SplitReport> reports = find_splits(s);
  for (const SplitReport& r : reports)
    if (r.label == i) split = &r;
  if (!split || !split->perfect) throw NotAPerfectSplit(i);

  unsigned n = s.degree, c = n;
  std::vector<Perm> gens;
  for (unsigned j = 0; j < i; ++j) gens.push_back(s.gens[j].lifted(n + 1));
  gens.push_back(split->alpha.lifted(n + 1) *
                 Perm::transposition(n + 1, split->a, c));
  gens.push_back(split->beta.lifted(n + 1) *
                 Perm::transposition(n + 1, c, split->b));
  for (unsigned j = i + 1; j < s.rank(); ++j)
    gens.push_back(s.gens[j].lifted(n + 1));

  RdExtension ext;
  ext.source = s;
  ext.split_label = i;
  ext.new_point = c;
  ext.result = make_sggi(n + 1, std::move(gens));
  return ext;
}

RdGuard rd_guard(const Sggi& s, unsigned i) {
  const SplitReport* split = nullptr;
  std::vector<SplitReport> reports = find_splits(s);
  for (const SplitReport& r : reports)
    if (r.label == i) split = &r;
  if (!split || !split->perfect) throw NotAPerfectSplit(i);

  if (!fracture_graph(s)) return RdGuard::NoGuarantee;

  // Global fixed points of the parabolic dropping generator i.
  for (unsigned x : {split->a, split->b}) {
    bool fixed_by_all = true;
    for (unsigned j = 0; j < s.rank() && fixed_by_all; ++j)
      if (j != i && s.gens[j].moves(x)) fixed_by_all = false;
    if (fixed_by_all) return RdGuard::NoGuarantee;
  }

  if (!split->alpha.is_identity() && !split->beta.is_identity())
    return RdGuard::NoGuarantee;
  return RdGuard::GuaranteedStringC;
}

}  // namespace sgc
