#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covnum/perm.hpp"

namespace covnum {

enum class GroupCase { Odd, EvenWreath };

// G = A_n^m x| <gamma> with gamma = (1,...,1,tau)delta of order 2m (Odd),
// or the wreath product A_n wr C_m (EvenWreath). tau = (12), delta = (1..m).
struct GroupSpec {
  int n = 5;
  int m = 1;
  GroupCase kase = GroupCase::Odd;

  int twist_modulus() const { return kase == GroupCase::Odd ? 2 * m : m; }
  // |G| = (n!/2)^m * twist_modulus(); throws if it exceeds long long range.
  long long order() const;
  bool enumerable() const;  // order() <= 10^7
  std::string str() const;

  bool operator==(const GroupSpec&) const = default;
};

constexpr long long kEnumerationGuard = 10'000'000;

// Normal form (x_1,...,x_m) gamma^k with every x_i even.
struct MonolithElement {
  std::vector<Perm> base;
  int twist = 0;

  bool operator==(const MonolithElement&) const = default;
  std::string str(const GroupSpec& spec) const;
};

// Element of the ambient wreath product S_n wr Sym(m) with cyclic shift:
// (w_1,...,w_m) delta^shift.
struct AmbientElement {
  std::vector<Perm> w;
  int shift = 0;  // mod m

  bool operator==(const AmbientElement&) const = default;
};

// tau-placement of gamma^k: pattern[d-1] is true iff coordinate d carries tau.
// For 0<k<m: d > m-k; for m<k<2m: d <= 2m-k; k=m: all; k=0: none.
std::vector<bool> twist_pattern(const GroupSpec& spec, int k);

// gamma^k expanded in the ambient product (Odd case only).
AmbientElement gamma_power(const GroupSpec& spec, int k);

AmbientElement ambient_of(const GroupSpec& spec, const MonolithElement& e);

// Accepts an ambient element iff its parity vector matches the tau pattern of
// exactly one k in {shift, shift+m} (Odd) / iff all coordinates are even
// (EvenWreath). Reject is a value.
std::optional<MonolithElement> in_group(const GroupSpec& spec, const AmbientElement& w);

MonolithElement identity_element(const GroupSpec& spec);
MonolithElement multiply(const GroupSpec& spec, const MonolithElement& a,
                         const MonolithElement& b);
MonolithElement inverse(const GroupSpec& spec, const MonolithElement& a);

// Strand products of the ambient coordinates along the <delta^twist>-orbits
// on {1..m}: for orbit representative i, w_i w_{i+k} w_{i+2k} ... (indices
// mod m). For twist k coprime to 2m this is the single product
// x_1 x_{1+k} ... tau-interleaved; for twist r | m it is the r products
// x_i x_{i+r} ... x_{i+m-r} tau.
//
// r encodes the caller's expectation and is validated against the twist:
//   r == 1       : twist coprime to 2m (single product, always odd in Odd case)
//   r | m        : twist == r
//   r == 2, m odd: twist == 2 (single chain with two tau factors)
std::vector<Perm> product_invariant(const GroupSpec& spec, const MonolithElement& e,
                                    int r);

// Cycle type of x*y for (x,y) outside the socle of A_n wr C_2.
CycleType element_type(const GroupSpec& spec, const MonolithElement& e);

// Frozen indexed enumeration: index = (twist * |A_n| + rank x_1) * |A_n| + ...
// (twist major, then base lexicographic by image tuples).
class GroupUniverse {
public:
  explicit GroupUniverse(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  long long size() const { return size_; }
  long long index_of(const MonolithElement& e) const;
  MonolithElement element_at(long long idx) const;
  const std::vector<Perm>& an() const { return an_; }
  int an_rank(const Perm& p) const { return rank_table_[p.lex_rank()]; }

private:
  GroupSpec spec_;
  long long size_ = 0;
  std::vector<Perm> an_;
  std::vector<int32_t> rank_table_;  // S_n lex rank -> A_n index (-1 if odd)
};

}  // namespace covnum
