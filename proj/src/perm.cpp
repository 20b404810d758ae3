#include "sgc/perm.hpp"

#include <algorithm>
#include <numeric>

#include "sgc/kernels.hpp"

namespace sgc {

std::string u128_str(U128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

U128 factorial(unsigned n) {
  U128 f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Perm::Perm(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v])
      throw Error("images do not form a bijection");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::transposition(unsigned degree, unsigned a, unsigned b) {
  if (a >= degree || b >= degree || a == b)
    throw Error("bad transposition endpoints");
  Perm p(degree);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::parse(const std::string& text, unsigned degree) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw Error("expected '(' in permutation: " + text);
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw Error("expected point number in permutation: " + text);
      unsigned v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      if (v == 0 || v > degree)
        throw Error("point " + std::to_string(v) + " outside degree " +
                    std::to_string(degree));
      if (used[v - 1]) throw Error("point repeated: " + text);
      used[v - 1] = true;
      cyc.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw Error("unterminated cycle: " + text);
    ++i;  // ')'
    skip_ws();
    any = true;
    if (cyc.size() > 1)
      for (std::size_t k = 0; k < cyc.size(); ++k)
        p.img_[cyc[k]] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
  }
  if (!any) throw Error("empty permutation text");
  return p;
}

Perm Perm::operator*(const Perm& q) const {
  if (degree() != q.degree()) throw Error("degree mismatch in composition");
  Perm r;
  r.img_.resize(img_.size());
  if (!img_.empty())
    kernels::compose(img_.data(), q.img_.data(), r.img_.data(), degree());
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (unsigned i = 0; i < degree(); ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::conj(const Perm& g) const {
  if (degree() != g.degree()) throw Error("degree mismatch in conjugation");
  Perm r;
  r.img_.resize(img_.size());
  for (unsigned i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  bool moved = false;
  for (unsigned i = 0; i < degree(); ++i) {
    if (img_[i] != i) {
      moved = true;
      if (img_[img_[i]] != i) return false;
    }
  }
  return moved;
}

bool Perm::even() const {
  std::vector<bool> seen(degree(), false);
  unsigned swaps = 0;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 0;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<unsigned> Perm::support() const {
  std::vector<unsigned> s;
  for (unsigned i = 0; i < degree(); ++i)
    if (img_[i] != i) s.push_back(i);
  return s;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<unsigned> cyc;
    for (unsigned j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> Perm::transpositions() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < degree(); ++i) {
    unsigned j = img_[i];
    if (j > i && img_[j] == i) out.emplace_back(i, j);
  }
  return out;
}

std::string Perm::str() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s.push_back('(');
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s.push_back(',');
      s += std::to_string(c[k] + 1);
    }
    s.push_back(')');
  }
  return s;
}

Perm Perm::lifted(unsigned new_degree) const {
  if (new_degree < degree()) throw Error("lift cannot shrink degree");
  Perm p(new_degree);
  for (unsigned i = 0; i < degree(); ++i) p.img_[i] = img_[i];
  return p;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : p.images()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Perm> all_involutions(unsigned n) {
  std::vector<Perm> out;
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  // Backtrack over the smallest unpaired point: fix it or pair it upward.
  auto rec = [&](auto&& self, unsigned from, bool any) -> void {
    unsigned i = from;
    while (i < n && img[i] != i) ++i;
    if (i >= n) {
      if (any) out.push_back(Perm::from_images(img));
      return;
    }
    for (unsigned j = i + 1; j < n; ++j) {
      if (img[j] != j) continue;
      img[i] = static_cast<std::uint8_t>(j);
      img[j] = static_cast<std::uint8_t>(i);
      self(self, i + 1, true);
      img[i] = static_cast<std::uint8_t>(i);
      img[j] = static_cast<std::uint8_t>(j);
    }
    self(self, i + 1, any);
  };
  rec(rec, 0, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> involution_class_reps(unsigned n) {
  std::vector<Perm> reps;
  for (unsigned k = 1; 2 * k <= n; ++k) {
    Perm p(n);
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (unsigned c = 0; c < k; ++c) std::swap(img[2 * c], img[2 * c + 1]);
    reps.push_back(Perm::from_images(img));
  }
  return reps;
}

}  // namespace sgc
