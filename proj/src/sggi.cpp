#include "sgc/sggi.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace sgc {

NotInvolution::NotInvolution(unsigned i)
    : Error("generator " + std::to_string(i) + " is not an involution"),
      index(i) {}

StringConditionFails::StringConditionFails(unsigned a, unsigned b)
    : Error("generators " + std::to_string(a) + " and " + std::to_string(b) +
            " do not commute"),
      i(a),
      j(b) {}

Sggi make_sggi(unsigned degree, std::vector<Perm> gens) {
  for (unsigned i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != degree)
      throw Error("generator " + std::to_string(i) + " has degree " +
                  std::to_string(gens[i].degree()) + ", expected " +
                  std::to_string(degree));
    if (!gens[i].is_involution()) throw NotInvolution(i);
  }
  for (unsigned i = 0; i + 2 < gens.size(); ++i)
    for (unsigned j = i + 2; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        throw StringConditionFails(i, j);
  return Sggi{degree, std::move(gens)};
}

Sggi dual(const Sggi& s) {
  Sggi d = s;
  std::reverse(d.gens.begin(), d.gens.end());
  return d;
}

Sggi parabolic_select(const Sggi& s, const std::vector<unsigned>& J) {
  std::vector<unsigned> idx = J;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Sggi out;
  out.degree = s.degree;
  for (unsigned i : idx) {
    if (i >= s.rank())
      throw Error("parabolic index " + std::to_string(i) + " out of range");
    out.gens.push_back(s.gens[i]);
  }
  return out;
}

Sggi parabolic_delete(const Sggi& s, const std::vector<unsigned>& J) {
  std::vector<unsigned> keep;
  for (unsigned i = 0; i < s.rank(); ++i)
    if (std::find(J.begin(), J.end(), i) == J.end()) keep.push_back(i);
  return parabolic_select(s, keep);
}

std::vector<unsigned> schlafli(const Sggi& s) {
  if (s.rank() < 2) throw Error("schlafli type needs rank >= 2");
  std::vector<unsigned> type;
  for (unsigned i = 1; i < s.rank(); ++i)
    type.push_back(static_cast<unsigned>((s.gens[i - 1] * s.gens[i]).order()));
  return type;
}

PermGroup group_of(const Sggi& s) { return PermGroup(s.degree, s.gens); }

namespace {

// Restrict a tuple to the union of its supports, relabeling the moved
// points in ascending order. The restricted action is faithful, so the
// string C verdict is unchanged, and shifted copies of one abstract
// tuple collapse onto one cache key.
std::pair<unsigned, std::vector<Perm>> restrict_support(
    unsigned degree, const std::vector<Perm>& gens) {
  std::vector<bool> moved(degree, false);
  for (const Perm& g : gens)
    for (unsigned x = 0; x < degree; ++x)
      if (g.moves(x)) moved[x] = true;
  std::vector<int> map(degree, -1);
  unsigned m = 0;
  for (unsigned x = 0; x < degree; ++x)
    if (moved[x]) map[x] = static_cast<int>(m++);
  std::vector<Perm> out;
  out.reserve(gens.size());
  for (const Perm& g : gens) {
    std::vector<std::uint8_t> img(m);
    for (unsigned x = 0; x < degree; ++x)
      if (map[x] >= 0) img[map[x]] = static_cast<std::uint8_t>(map[g.at(x)]);
    out.push_back(Perm::from_images(std::move(img)));
  }
  return {m, std::move(out)};
}

std::string cache_key(unsigned degree, const std::vector<Perm>& gens) {
  std::string key;
  key.reserve(2 + gens.size() * degree);
  key.push_back(static_cast<char>(gens.size()));
  key.push_back(static_cast<char>(degree));
  for (const Perm& g : gens)
    key.append(reinterpret_cast<const char*>(g.images().data()), degree);
  return key;
}

std::shared_mutex cache_mutex;
std::unordered_map<std::string, CVerdict> cache;

std::optional<CVerdict> cache_get(const std::string& key) {
  std::shared_lock lock(cache_mutex);
  auto it = cache.find(key);
  if (it == cache.end()) return std::nullopt;
  return it->second;
}

void cache_put(const std::string& key, const CVerdict& v) {
  std::unique_lock lock(cache_mutex);
  cache.emplace(key, v);
}

std::vector<unsigned> index_range(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

CVerdict check_tuple(unsigned degree, const std::vector<Perm>& gens,
                     const IntersectConfig& cfg) {
  unsigned r = static_cast<unsigned>(gens.size());
  if (r <= 1) return {Tri::True, std::nullopt};
  if (r == 2) {
    if (gens[0] != gens[1]) return {Tri::True, std::nullopt};
    CWitness w;
    w.J = {0};
    w.K = {1};
    w.expected_order = 1;  // the empty parabolic
    w.actual_order = 2;
    return {Tri::False, w};
  }

  auto [m, rgens] = restrict_support(degree, gens);
  std::string key = cache_key(m, rgens);
  if (auto hit = cache_get(key)) return *hit;

  std::vector<Perm> tail(rgens.begin() + 1, rgens.end());
  std::vector<Perm> head(rgens.begin(), rgens.end() - 1);

  CVerdict va = check_tuple(m, tail, cfg);
  if (va.value == Tri::False) {
    for (unsigned& i : va.witness->J) ++i;
    for (unsigned& i : va.witness->K) ++i;
    cache_put(key, va);
    return va;
  }
  if (va.value == Tri::Indeterminate) return va;

  CVerdict vb = check_tuple(m, head, cfg);
  if (vb.value == Tri::False) {
    cache_put(key, vb);
    return vb;
  }
  if (vb.value == Tri::Indeterminate) return vb;

  PermGroup g0(m, tail);
  PermGroup gr(m, head);
  std::vector<Perm> middle(rgens.begin() + 1, rgens.end() - 1);
  PermGroup shared(m, middle);

  MeetResult meet = meet_equals(gr, g0, shared, cfg);
  if (meet.verdict == MeetVerdict::Unknown)
    return {Tri::Indeterminate, std::nullopt};

  CVerdict out;
  if (meet.verdict == MeetVerdict::Equal) {
    out.value = Tri::True;
  } else {
    out.value = Tri::False;
    CWitness w;
    w.J = index_range(0, r - 1);
    w.K = index_range(1, r);
    w.expected_order = shared.order();
    if (std::min(g0.order(), gr.order()) <= cfg.enumeration_cap) {
      IntersectResult full = intersection(gr, g0, cfg, &shared);
      if (!full.indeterminate) w.actual_order = full.group->order();
    }
    out.witness = w;
  }
  cache_put(key, out);
  return out;
}

}  // namespace

CVerdict is_string_cgroup(const Sggi& s, const IntersectConfig& cfg) {
  return check_tuple(s.degree, s.gens, cfg);
}

CVerdict intersection_property_bruteforce(const Sggi& s,
                                          const IntersectConfig& cfg) {
  unsigned r = s.rank();
  if (r > 7)
    throw Error("intersection_property_bruteforce: rank " + std::to_string(r) +
                " exceeds the subset-pair limit of 7");
  unsigned total = 1u << r;
  std::vector<std::optional<PermGroup>> groups(total);
  auto group_for = [&](unsigned mask) -> const PermGroup& {
    if (!groups[mask]) {
      std::vector<Perm> g;
      for (unsigned i = 0; i < r; ++i)
        if (mask & (1u << i)) g.push_back(s.gens[i]);
      groups[mask].emplace(s.degree, std::move(g));
    }
    return *groups[mask];
  };
  auto indices_of = [&](unsigned mask) {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < r; ++i)
      if (mask & (1u << i)) out.push_back(i);
    return out;
  };

  bool saw_unknown = false;
  for (unsigned m1 = 1; m1 < total; ++m1)
    for (unsigned m2 = m1 + 1; m2 < total; ++m2) {
      unsigned common = m1 & m2;
      if (common == m1 || common == m2) continue;  // nested pair, trivially ok
      MeetResult meet =
          meet_equals(group_for(m1), group_for(m2), group_for(common), cfg);
      if (meet.verdict == MeetVerdict::Unknown) {
        saw_unknown = true;
        continue;
      }
      if (meet.verdict == MeetVerdict::NotEqual) {
        CWitness w;
        w.J = indices_of(m1);
        w.K = indices_of(m2);
        w.expected_order = group_for(common).order();
        const PermGroup& a = group_for(m1);
        const PermGroup& b = group_for(m2);
        if (std::min(a.order(), b.order()) <= cfg.enumeration_cap) {
          IntersectResult full = intersection(a, b, cfg, &group_for(common));
          if (!full.indeterminate) w.actual_order = full.group->order();
        }
        return {Tri::False, w};
      }
    }
  if (saw_unknown) return {Tri::Indeterminate, std::nullopt};
  return {Tri::True, std::nullopt};
}

Sggi parse_sggi_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_degree = false;
  unsigned degree = 0;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (!have_degree) {
      if (first != "degree") throw ParseError(lineno, "expected 'degree <n>'");
      long n = 0;
      if (!(ls >> n) || n < 1 || n > 255)
        throw ParseError(lineno, "bad degree value");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing tokens after degree");
      degree = static_cast<unsigned>(n);
      have_degree = true;
      continue;
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "one permutation per line");
    try {
      gens.push_back(Perm::parse(first, degree));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_degree) throw ParseError(lineno, "missing 'degree <n>' header");
  return make_sggi(degree, std::move(gens));
}

std::string print_sggi_text(const Sggi& s) {
  std::string out = "degree " + std::to_string(s.degree) + "\n";
  for (const Perm& g : s.gens) out += g.str() + "\n";
  return out;
}

}  // namespace sgc
