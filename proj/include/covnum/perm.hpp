#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace covnum {

// Multiset of cycle lengths (descending, fixed points included).
struct CycleType {
  std::vector<int> parts;

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;
  std::string str() const;
};

// Permutation of {1..n}, 1 <= n <= 16. Right action throughout the
// project: (i)(p*q) = ((i)p)q, and p^g = g^-1 p g.
class Perm {
public:
  static constexpr int kMaxPoints = 16;

  Perm() { *this = identity(1); }
  static Perm identity(int n);
  static Perm from_images(std::span<const int> images);
  // Cycle notation: "(2354)", "(12)(345)", "id". Points >= 10 need
  // comma-separated cycles, e.g. "(1,12,5)".
  static Perm from_cycles(int n, const std::string& text);

  int n() const { return n_; }
  int apply(int point) const { return img_[point - 1]; }

  Perm compose(const Perm& q) const;  // this, then q
  Perm inverse() const;
  Perm conjugate(const Perm& g) const;  // g^-1 * this * g
  Perm power(long e) const;

  bool is_identity() const;
  bool even() const;
  CycleType cycle_type() const;
  int order() const;
  std::string cycles() const;

  // Packed nibble key; order-preserving among permutations of equal n.
  uint64_t key() const;
  // Lexicographic rank of the image tuple within S_n (0-based).
  long lex_rank() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  uint8_t n_ = 1;
  std::array<uint8_t, kMaxPoints> img_{};  // img_[i] = image of i+1
};

long factorial_small(int n);  // n <= 20

// Full enumeration, sorted by image tuple. Guard: n <= 8.
const std::vector<Perm>& symmetric_group(int n);
const std::vector<Perm>& alternating_group(int n);

// Number of s in S_n with s^r = b, by exhaustive enumeration (n <= 8).
long count_roots(const Perm& b, int r);

}  // namespace covnum
