#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covnum/bitset.hpp"
#include "covnum/perm.hpp"

namespace covnum {

// One subgroup of S_n, as a bitset over the sorted S_n enumeration.
struct LatticeSubgroup {
  DynBitset elems;
  int order = 0;
  int class_id = 0;
  bool contained_in_an = false;
  std::vector<int> generators;  // element indices (reps only; empty otherwise)
};

// Complete subgroup lattice of S_n (n <= 7), built by breadth-first closure:
// starting from the trivial subgroup, every conjugacy class of subgroups is
// reached by single prime-power-order element extensions of class
// representatives (every subgroup arises along such a chain). Maximality
// flags come from the recorded extensions, so the maximal lists are
// certified rather than quoted.
class SnLattice {
public:
  static const SnLattice& instance(int n);  // cached, n <= 7

  int n() const { return n_; }
  const std::vector<Perm>& elements() const { return sn_; }
  const std::vector<LatticeSubgroup>& subgroups() const { return subs_; }
  std::size_t subgroup_count() const { return subs_.size(); }

  // Indices into subgroups() of the maximal proper subgroups.
  const std::vector<int>& maximals_of_sn() const { return max_sn_; }
  const std::vector<int>& maximals_of_an() const { return max_an_; }

  int element_index(const Perm& p) const;
  const DynBitset& an_mask() const { return an_mask_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * order_ + std::size_t(b)]; }
  int inv(int a) const { return inv_[std::size_t(a)]; }

  // N_{S_n}(H) for an element-index set.
  DynBitset normalizer(const DynBitset& sub) const;
  DynBitset conjugate_set(const DynBitset& sub, int g) const;

private:
  explicit SnLattice(int n);
  void build();

  int n_ = 0;
  std::size_t order_ = 0;
  std::vector<Perm> sn_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inv_;
  std::vector<bool> prime_power_;
  DynBitset an_mask_;
  std::vector<LatticeSubgroup> subs_;
  std::vector<int> max_sn_, max_an_;
};

}  // namespace covnum
