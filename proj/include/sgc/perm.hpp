#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Permutations of {1..n} with explicit degree. Points are 0-based
// internally; all text I/O (disjoint cycle notation) is 1-based.
// Composition is left to right: x^(p*q) = (x^p)^q.

namespace sgc {

using U128 = unsigned __int128;

std::string u128_str(U128 v);
U128 factorial(unsigned n);

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned degree);  // identity

  static Perm from_images(std::vector<std::uint8_t> images);
  // "(1,2)(3,4)" or "()"; degree given explicitly, never inferred.
  static Perm parse(const std::string& text, unsigned degree);
  static Perm transposition(unsigned degree, unsigned a, unsigned b);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint8_t at(unsigned x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  Perm operator*(const Perm& q) const;  // this, then q
  Perm inverse() const;
  Perm conj(const Perm& g) const;  // g^-1 * this * g

  bool is_identity() const;
  bool is_involution() const;  // order exactly 2
  bool even() const;
  std::uint64_t order() const;

  bool moves(unsigned x) const { return img_[x] != x; }
  std::vector<unsigned> support() const;

  // Nontrivial cycles, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<unsigned>> cycles() const;
  // The 2-cycles (an involution's full support decomposition).
  std::vector<std::pair<unsigned, unsigned>> transpositions() const;

  std::string str() const;

  // Same mapping on a larger domain, new points fixed.
  Perm lifted(unsigned new_degree) const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;  // lex on images

 private:
  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// All involutions of S_n, ascending in image order.
std::vector<Perm> all_involutions(unsigned n);

// One lex-least representative per involution conjugacy class
// (k disjoint 2-cycles, k = 1..n/2).
std::vector<Perm> involution_class_reps(unsigned n);

}  // namespace sgc
