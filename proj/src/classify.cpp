#include "sgc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace sgc {

void SearchStats::merge(const SearchStats& o) {
  nodes += o.nodes;
  leaves += o.leaves;
  accepted_raw += o.accepted_raw;
  indeterminate_leaves += o.indeterminate_leaves;
  conj_duplicates += o.conj_duplicates;
  dual_duplicates += o.dual_duplicates;
  outer_duplicates += o.outer_duplicates;
  for (const auto& [key, count] : o.prunes) prunes[key] += count;
}

namespace {

bool commutes(const Perm& a, const Perm& b) {
  for (unsigned x = 0; x < a.degree(); ++x)
    if (a.at(b.at(x)) != b.at(a.at(x))) return false;
  return true;
}

// Centralizer of an involution in the full symmetric group: each
// 2-cycle, swaps of consecutive 2-cycles, adjacent transpositions of
// the fixed points.
std::vector<Perm> involution_centralizer(unsigned n, const Perm& t) {
  auto pairs = t.transpositions();
  std::vector<Perm> out;
  for (const auto& [a, b] : pairs) out.push_back(Perm::transposition(n, a, b));
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[pairs[k].first] = static_cast<std::uint8_t>(pairs[k + 1].first);
    img[pairs[k + 1].first] = static_cast<std::uint8_t>(pairs[k].first);
    img[pairs[k].second] = static_cast<std::uint8_t>(pairs[k + 1].second);
    img[pairs[k + 1].second] = static_cast<std::uint8_t>(pairs[k].second);
    out.push_back(Perm::from_images(std::move(img)));
  }
  std::vector<unsigned> fixed;
  for (unsigned x = 0; x < n; ++x)
    if (!t.moves(x)) fixed.push_back(x);
  for (std::size_t k = 0; k + 1 < fixed.size(); ++k)
    out.push_back(Perm::transposition(n, fixed[k], fixed[k + 1]));
  return out;
}

// Conjugation orbit of t under the given centralizer generators.
// False as soon as some orbit element sorts below t; on success, when
// stab_out is given, it receives reduced Schreier generators for the
// stabilizer of t, i.e. the centralizer of the extended prefix.
bool canonical_minimum(unsigned n, const Perm& t, const std::vector<Perm>& cz,
                       std::vector<Perm>* stab_out) {
  std::vector<Perm> orb{t};
  std::vector<Perm> tr{Perm(n)};
  std::unordered_map<Perm, unsigned, PermHash> where;
  where.emplace(t, 0u);
  std::unordered_set<Perm, PermHash> sgens;
  for (std::size_t k = 0; k < orb.size(); ++k) {
    const Perm u = orb[k];
    const Perm tu = tr[k];
    for (const Perm& g : cz) {
      Perm v = u.conj(g);
      if (v < t) return false;
      auto it = where.find(v);
      if (it == where.end()) {
        where.emplace(v, static_cast<unsigned>(orb.size()));
        orb.push_back(std::move(v));
        tr.push_back(tu * g);
      } else if (stab_out) {
        Perm s = tu * g * tr[it->second].inverse();
        if (!s.is_identity()) sgens.insert(std::move(s));
      }
    }
  }
  if (stab_out) {
    std::vector<Perm> raw(sgens.begin(), sgens.end());
    std::sort(raw.begin(), raw.end());
    *stab_out = reduce_generating_set(n, raw);
  }
  return true;
}

// Orbit of point 0 under all generators except one; no group build.
bool transitive_without(unsigned n, const std::vector<Perm>& gens,
                        std::size_t skip) {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<unsigned> stack{0};
  seen[0] = 1;
  unsigned cnt = 1;
  while (!stack.empty()) {
    unsigned x = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == skip) continue;
      unsigned y = gens[k].at(x);
      if (!seen[y]) {
        seen[y] = 1;
        ++cnt;
        stack.push_back(y);
      }
    }
  }
  return cnt == n;
}

struct SearchCtx {
  unsigned n = 0, r = 0;
  U128 target = 0;
  bool regime = false;  // 2r >= n+3: every maximal parabolic is intransitive
  const EnumerateOptions* opts = nullptr;
  std::shared_ptr<const std::vector<Perm>> involutions;
  std::atomic<std::uint64_t>* node_counter = nullptr;
  std::atomic<bool>* capped = nullptr;
};

struct TaskResult {
  std::vector<Sggi> accepted;
  SearchStats stats;
  bool complete = true;
};

// One surviving depth-2 prefix; workers take these in order.
struct Task {
  std::vector<Perm> prefix;
  PermGroup group;
  std::vector<Perm> cz;
  std::vector<Perm> cands;
};

// Exhaustive completion check behind debug_recheck: can the pruned
// prefix be extended, with nothing but the string condition, to a
// tuple generating the whole symmetric group and passing the
// brute-force intersection property?
bool completable(const SearchCtx& ctx, std::vector<Perm>& pre) {
  if (pre.size() == ctx.r) {
    if (PermGroup(ctx.n, pre).order() != ctx.target) return false;
    Sggi s{ctx.n, pre};
    return intersection_property_bruteforce(s, ctx.opts->intersect).value ==
           Tri::True;
  }
  const std::size_t i = pre.size();
  for (const Perm& t : *ctx.involutions) {
    bool ok = true;
    for (std::size_t j = 0; j + 1 < i && ok; ++j) ok = commutes(t, pre[j]);
    if (!ok) continue;
    pre.push_back(t);
    bool found = completable(ctx, pre);
    pre.pop_back();
    if (found) return true;
  }
  return false;
}

void recheck_prune(const SearchCtx& ctx, const std::vector<Perm>& prefix,
                   const Perm& t, const char* kind) {
  if (!ctx.opts->debug_recheck) return;
  std::vector<Perm> pre = prefix;
  pre.push_back(t);
  if (completable(ctx, pre))
    throw std::logic_error(std::string("prune '") + kind +
                           "' rejected a prefix with a valid completion");
}

// cands holds the involutions commuting with prefix[0..i-2]. With a
// sink, depth-2 frames are emitted as tasks instead of searched.
void dfs(const SearchCtx& ctx, std::vector<Perm>& prefix,
         const PermGroup& pgroup, const std::vector<Perm>& cz,
         const std::vector<Perm>& cands, TaskResult& out,
         std::vector<Task>* sink) {
  const unsigned i = static_cast<unsigned>(prefix.size());
  if (sink && i == 2) {
    sink->push_back(Task{prefix, pgroup, cz, cands});
    return;
  }
  const bool leaf = (i + 1 == ctx.r);
  std::optional<std::vector<Perm>> child;  // level-(i+1) list, t-independent
  for (const Perm& t : cands) {
    if (ctx.capped->load(std::memory_order_relaxed)) {
      out.complete = false;
      return;
    }
    const std::uint64_t seen = ctx.node_counter->fetch_add(1) + 1;
    ++out.stats.nodes;
    if (ctx.opts->node_cap && seen > ctx.opts->node_cap) {
      ctx.capped->store(true);
      out.complete = false;
      return;
    }

    // A commuting adjacent pair disconnects the diagram, forcing a
    // direct product; the full symmetric group is not one.
    if (commutes(t, prefix.back())) {
      ++out.stats.prunes["adjacent_commute"];
      recheck_prune(ctx, prefix, t, "adjacent_commute");
      continue;
    }
    // Keep only the least tuple of each conjugacy class: t must be
    // minimal in its orbit under the centralizer of the prefix.
    // Correctness is covered by the reference-search comparison, so
    // debug_recheck skips this one.
    std::vector<Perm> stab;
    if (!canonical_minimum(ctx.n, t, cz, leaf ? nullptr : &stab)) {
      ++out.stats.prunes["canonical"];
      continue;
    }
    // The intersection property forces each generator outside the
    // group of the others.
    if (pgroup.contains(t)) {
      ++out.stats.prunes["dependent"];
      recheck_prune(ctx, prefix, t, "dependent");
      continue;
    }

    std::vector<Perm> ng = prefix;
    ng.push_back(t);
    PermGroup g2(ctx.n, ng);
    const U128 ord = g2.order();
    // Every later generator at least doubles the group.
    if (ord * (U128{1} << (ctx.r - 1 - i)) > ctx.target) {
      ++out.stats.prunes["order_bound"];
      recheck_prune(ctx, prefix, t, "order_bound");
      continue;
    }

    if (leaf) {
      ++out.stats.leaves;
      if (ord != ctx.target) {
        ++out.stats.prunes["leaf_order"];
        continue;
      }
      if (ctx.regime) {
        bool bad = false;
        for (std::size_t j = 0; j < ng.size() && !bad; ++j)
          bad = transitive_without(ctx.n, ng, j);
        if (bad) {
          ++out.stats.prunes["regime_parabolic"];
          recheck_prune(ctx, prefix, t, "regime_parabolic");
          continue;
        }
      }
      Sggi s{ctx.n, ng};
      CVerdict v = is_string_cgroup(s, ctx.opts->intersect);
      if (v.value == Tri::True) {
        ++out.stats.accepted_raw;
        out.accepted.push_back(std::move(s));
      } else if (v.value == Tri::Indeterminate) {
        ++out.stats.indeterminate_leaves;
        out.complete = false;
      } else {
        ++out.stats.prunes["not_string_c"];
      }
    } else {
      if (ctx.regime && g2.transitive()) {
        ++out.stats.prunes["early_transitive"];
        recheck_prune(ctx, prefix, t, "early_transitive");
        continue;
      }
      Sggi s{ctx.n, ng};
      if (is_string_cgroup(s, ctx.opts->intersect).value == Tri::False) {
        ++out.stats.prunes["prefix_string_c"];
        recheck_prune(ctx, prefix, t, "prefix_string_c");
        continue;
      }
      if (!child) {
        child.emplace();
        for (const Perm& c : cands)
          if (commutes(c, prefix.back())) child->push_back(c);
      }
      prefix.push_back(t);
      dfs(ctx, prefix, g2, stab, *child, out, sink);
      prefix.pop_back();
    }
  }
}

Sggi outer_tuple(const Sggi& s) {
  Sggi out{s.degree, {}};
  for (const Perm& p : s.gens) out.gens.push_back(s6_outer_image(p));
  return out;
}

// First-seen survivor per class. The first pass folds conjugacy and
// duality (count_inner); degree 6 gets a second pass folding the outer
// automorphism.
void dedup_into(unsigned n, const std::vector<Sggi>& raw,
                ClassificationResult& res) {
  std::vector<Sggi> inner;
  std::vector<std::vector<unsigned>> types;
  for (const Sggi& s : raw) {
    auto sl = schlafli(s);
    auto slr = sl;
    std::reverse(slr.begin(), slr.end());
    const Sggi sd = dual(s);
    bool dup = false;
    for (std::size_t k = 0; k < inner.size() && !dup; ++k) {
      if (sl == types[k] && tuple_conjugator(s.gens, inner[k].gens)) {
        ++res.stats.conj_duplicates;
        dup = true;
      } else if (slr == types[k] &&
                 tuple_conjugator(sd.gens, inner[k].gens)) {
        ++res.stats.dual_duplicates;
        dup = true;
      }
    }
    if (!dup) {
      inner.push_back(s);
      types.push_back(std::move(sl));
    }
  }
  res.count_inner = inner.size();
  if (n != 6) {
    res.representatives = std::move(inner);
    return;
  }
  std::vector<Sggi> kept;
  std::vector<std::vector<unsigned>> ktypes;
  for (const Sggi& s : inner) {
    auto sl = schlafli(s);
    auto slr = sl;
    std::reverse(slr.begin(), slr.end());
    const Sggi os = outer_tuple(s);  // same orders, so same type
    const Sggi osd = dual(os);
    bool dup = false;
    for (std::size_t k = 0; k < kept.size() && !dup; ++k) {
      if ((sl == ktypes[k] && tuple_conjugator(os.gens, kept[k].gens)) ||
          (slr == ktypes[k] && tuple_conjugator(osd.gens, kept[k].gens))) {
        ++res.stats.outer_duplicates;
        dup = true;
      }
    }
    if (!dup) {
      kept.push_back(s);
      ktypes.push_back(std::move(sl));
    }
  }
  res.representatives = std::move(kept);
}

}  // namespace

ClassificationResult enumerate_sggi(unsigned n, unsigned r,
                                    const EnumerateOptions& opts) {
  if (r < 3) throw Error("classification needs rank at least 3");
  if (n > opts.max_degree)
    throw Error("degree " + std::to_string(n) + " exceeds the limit " +
                std::to_string(opts.max_degree));

  ClassificationResult res;
  res.degree = n;
  res.rank = r;

  std::atomic<std::uint64_t> node_counter{0};
  std::atomic<bool> capped{false};
  SearchCtx ctx;
  ctx.n = n;
  ctx.r = r;
  ctx.target = factorial(n);
  ctx.regime = 2 * r >= n + 3;
  ctx.opts = &opts;
  ctx.involutions =
      std::make_shared<const std::vector<Perm>>(all_involutions(n));
  ctx.node_counter = &node_counter;
  ctx.capped = &capped;

  // Serial depth-2 pass: one fixed representative per class of rho_0,
  // canonical rho_1 survivors become tasks. Splitting here keeps the
  // output independent of the worker count.
  std::vector<Task> tasks;
  TaskResult builder;
  for (const Perm& rho0 : involution_class_reps(n)) {
    ++builder.stats.nodes;
    std::vector<Perm> prefix{rho0};
    PermGroup g0(n, prefix);
    std::vector<Perm> cz = involution_centralizer(n, rho0);
    dfs(ctx, prefix, g0, cz, *ctx.involutions, builder, &tasks);
  }

  std::vector<TaskResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto run_task = [&](std::size_t k) {
    try {
      std::vector<Perm> prefix = tasks[k].prefix;
      dfs(ctx, prefix, tasks[k].group, tasks[k].cz, tasks[k].cands, results[k],
          nullptr);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  std::size_t nw = opts.workers == 0 ? 1 : opts.workers;
  nw = std::min(nw, tasks.size());
  if (nw <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_task(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nw; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= tasks.size()) break;
          run_task(k);
        }
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  res.stats = std::move(builder.stats);
  res.complete = builder.complete;
  std::vector<Sggi> raw;
  for (auto& tr : results) {
    res.stats.merge(tr.stats);
    res.complete = res.complete && tr.complete;
    for (auto& s : tr.accepted) raw.push_back(std::move(s));
  }
  if (capped.load()) res.complete = false;
  dedup_into(n, raw, res);
  return res;
}

ClassificationResult reference_enumerate(unsigned n, unsigned r,
                                         const EnumerateOptions& opts) {
  if (r < 3) throw Error("classification needs rank at least 3");
  if (n > 6) throw Error("the reference search is limited to degree 6");
  if (r > 7) throw Error("the reference search is limited to rank 7");

  ClassificationResult res;
  res.degree = n;
  res.rank = r;
  const std::vector<Perm> inv = all_involutions(n);
  const U128 target = factorial(n);
  std::vector<Perm> pre;
  std::vector<Sggi> raw;
  bool capped = false;

  auto walk = [&](auto&& self) -> void {
    if (pre.size() == r) {
      ++res.stats.leaves;
      if (PermGroup(n, pre).order() != target) {
        ++res.stats.prunes["leaf_order"];
        return;
      }
      Sggi s{n, pre};
      Tri v = intersection_property_bruteforce(s, opts.intersect).value;
      if (v == Tri::True) {
        ++res.stats.accepted_raw;
        raw.push_back(std::move(s));
      } else if (v == Tri::Indeterminate) {
        ++res.stats.indeterminate_leaves;
        res.complete = false;
      } else {
        ++res.stats.prunes["not_string_c"];
      }
      return;
    }
    for (const Perm& t : inv) {
      ++res.stats.nodes;
      if (opts.node_cap && res.stats.nodes > opts.node_cap) {
        capped = true;
        res.complete = false;
        return;
      }
      bool ok = true;
      for (std::size_t j = 0; j + 1 < pre.size() && ok; ++j)
        ok = commutes(t, pre[j]);
      if (!ok) {
        ++res.stats.prunes["string_condition"];
        continue;
      }
      pre.push_back(t);
      self(self);
      pre.pop_back();
      if (capped) return;
    }
  };
  walk(walk);
  dedup_into(n, raw, res);
  return res;
}

std::size_t sigma(unsigned n, unsigned kappa, const EnumerateOptions& opts) {
  if (n < kappa + 3)
    throw Error("sigma needs rank n - kappa at least 3, got n=" +
                std::to_string(n) + " kappa=" + std::to_string(kappa));
  return enumerate_sggi(n, n - kappa, opts).count();
}

PSet p_set(const Sggi& s) {
  PSet out;
  for (const SplitReport& sp : find_splits(s))
    if (sp.perfect && (sp.alpha.is_identity() || sp.beta.is_identity()))
      out.labels.push_back(sp.label);
  return out;
}

std::vector<Sggi> bijection_map(const ClassificationResult& result) {
  std::vector<Sggi> out;
  for (std::size_t idx = 0; idx < result.representatives.size(); ++idx) {
    const Sggi& s = result.representatives[idx];
    std::optional<unsigned> at;
    for (unsigned lab : p_set(s).labels)
      if (lab != 0 && lab + 1 != s.rank()) {
        at = lab;
        break;
      }
    if (!at) throw EmptyInteriorPSet(idx);
    out.push_back(rd_extend(s, *at).result);
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (equivalent_tuples(out[a], out[b]))
        throw Error("extensions of representatives " + std::to_string(a) +
                    " and " + std::to_string(b) + " collapse to one class");
  return out;
}

bool equivalent_tuples(const Sggi& a, const Sggi& b) {
  if (a.degree != b.degree || a.gens.size() != b.gens.size()) return false;
  std::vector<Sggi> forms{b};
  if (b.rank() >= 2) forms.push_back(dual(b));
  if (a.degree == 6) {
    Sggi ob = outer_tuple(b);
    if (b.rank() >= 2) forms.push_back(dual(ob));
    forms.push_back(std::move(ob));
  }
  const bool typed = a.rank() >= 2;
  const std::vector<unsigned> sa = typed ? schlafli(a) : std::vector<unsigned>{};
  for (const Sggi& f : forms) {
    if (typed && schlafli(f) != sa) continue;
    if (tuple_conjugator(a.gens, f.gens)) return true;
  }
  return false;
}

namespace {

struct OuterTable {
  std::vector<Perm> reps;  // coset representatives, least element first
  std::unordered_map<Perm, unsigned, PermHash> coset_of;
};

Perm outer_apply(const OuterTable& tab, const Perm& p) {
  std::vector<std::uint8_t> img(6);
  for (unsigned c = 0; c < 6; ++c)
    img[c] = static_cast<std::uint8_t>(tab.coset_of.at(tab.reps[c] * p));
  return Perm::from_images(std::move(img));
}

// Right-coset action on a transitive order-120 subgroup (the degree-5
// projective group sitting inside degree 6). Because the subgroup is
// transitive it is no point stabilizer, so the action twists the
// group by an outer automorphism.
OuterTable build_outer_table() {
  const std::vector<Perm> hgens = {
      Perm::from_images({1, 2, 3, 4, 0, 5}),  // shift on the first five
      Perm::from_images({0, 2, 4, 1, 3, 5}),  // doubling, two fixed points
      Perm::from_images({5, 4, 2, 3, 1, 0}),  // negated inversion
  };
  PermGroup h(6, hgens);
  if (h.order() != 120)
    throw std::logic_error("projective subgroup has the wrong order");
  const std::vector<Perm> helems = h.elements(128);

  OuterTable tab;
  std::vector<std::uint8_t> img{0, 1, 2, 3, 4, 5};
  do {  // lex order, so each fresh coset is keyed by its least element
    Perm g = Perm::from_images(img);
    if (tab.coset_of.count(g)) continue;
    const unsigned id = static_cast<unsigned>(tab.reps.size());
    for (const Perm& e : helems) tab.coset_of.emplace(e * g, id);
    tab.reps.push_back(std::move(g));
  } while (std::next_permutation(img.begin(), img.end()));
  if (tab.reps.size() != 6) throw std::logic_error("expected six cosets");
  return tab;
}

}  // namespace

Perm s6_outer_image(const Perm& p) {
  if (p.degree() != 6) throw Error("the outer automorphism lives on degree 6");
  static const OuterTable tab = [] {
    OuterTable t = build_outer_table();
    // a transposition has to land on a triple transposition, the
    // signature of the outer class
    Perm probe = outer_apply(t, Perm::transposition(6, 0, 1));
    if (!probe.is_involution() || probe.support().size() != 6)
      throw std::logic_error("coset action failed to twist the group");
    return t;
  }();
  return outer_apply(tab, p);
}

}  // namespace sgc
