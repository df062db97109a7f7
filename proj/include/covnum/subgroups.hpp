#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covnum/bitset.hpp"
#include "covnum/lattice.hpp"
#include "covnum/monolith.hpp"
#include "covnum/perm.hpp"

namespace covnum {

// A maximal subgroup of A_n or S_n, classified by its action.
struct AnMaxSubgroup {
  enum class Kind { Intransitive, Imprimitive, Primitive };
  Kind kind = Kind::Intransitive;
  std::vector<int> orbit_sizes;  // Intransitive: descending
  int block_size = 0;            // Imprimitive
  std::string tag;               // Primitive: "AGL(1,5)", "PGL(2,5)", ...
  bool subgroup_of_an = false;
  long order = 0;
  bool maximality_certified = false;  // lattice-verified (n <= 7)
  DynBitset elems;                    // over S_n lex enumeration (n <= 7 only)
  DynBitset normalizer;               // N_{S_n}(M) (n <= 7 only)

  std::string name() const;
};

struct AnCatalog {
  int n = 0;
  bool complete = false;  // certified complete by the subgroup lattice
  std::vector<AnMaxSubgroup> an_max;
  std::vector<AnMaxSubgroup> sn_max;
};

// n in [5,7]: complete and lattice-certified. n in {8,9}: the intransitive
// and imprimitive families only, orders by formula, maximality assumed.
const AnCatalog& catalog_an_maximals(int n);

// Exclusion checks for (2,n-2)-cycles and (n-1)-cycles against the S_n
// catalog: no primitive maximal contains the former, no imprimitive maximal
// contains the latter, no intransitive maximal contains both.
struct CycleExclusionReport {
  int n = 0;
  bool primitive_ok = false;
  bool imprimitive_ok = false;  // vacuous when no imprimitive maximals exist
  bool intransitive_ok = false;
  bool pass() const { return primitive_ok && imprimitive_ok && intransitive_ok; }
};
CycleExclusionReport check_pr2(int n);

// Symbolic identity of a maximal subgroup of the monolith group G.
struct SubgroupDescriptor {
  enum class Kind { Socle, TwistKernel, ProductType, DiagonalType };
  Kind kind = Kind::Socle;
  int r = 0;                     // TwistKernel: prime divisor of |G/soc|
  int base_index = -1;           // ProductType: index into MonolithContext bases
  std::vector<Perm> cosets;      // ProductType: a_2..a_m
  Perm alpha;                    // DiagonalType (m = 2)
  bool odd_rep_flagged = false;  // coset reps could not be rewritten into A_n

  bool operator==(const SubgroupDescriptor&) const = default;
};

// Base subgroup M < A_n for product-type descriptors, with cached masks
// over the S_n lex enumeration.
struct ProductBase {
  std::string name;
  std::vector<Perm> elements;
  DynBitset member_mask;
  DynBitset normalizer_mask;  // N_{S_n}(M)
  int index_in_an = 0;
};

// Everything needed to work inside one monolith group G: the frozen
// universe, the product-type base catalog, the maximal-subgroup list with
// its certification, and the membership predicates (lemma transcriptions
// plus a set-conjugation oracle).
class MonolithContext {
public:
  explicit MonolithContext(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  const GroupUniverse& universe() const { return universe_; }
  const std::vector<ProductBase>& bases() const { return bases_; }
  const std::vector<SubgroupDescriptor>& maximals() const { return maximals_; }
  bool maximal_list_certified() const { return certified_; }
  std::string descriptor_text(const SubgroupDescriptor& d) const;

  // membership dispatch: socle rule / coprime-twist / divisor-twist /
  // wreath epsilon rule / diagonal rules
  bool member(const MonolithElement& e, const SubgroupDescriptor& d) const;
  // independent set-conjugation oracle
  bool member_oracle(const MonolithElement& e, const SubgroupDescriptor& d) const;

  // literal transcriptions (exposed for cross-checking)
  bool member_coprime_twist(const MonolithElement& e, const ProductBase& M,
                            const std::vector<Perm>& cosets) const;
  bool member_divisor_twist(const MonolithElement& e, const ProductBase& M,
                            const std::vector<Perm>& cosets) const;
  bool member_product_general(const MonolithElement& e, const ProductBase& M,
                              const std::vector<Perm>& cosets) const;
  bool member_diag(const MonolithElement& e, const Perm& alpha) const;

  const DynBitset& expanded(std::size_t maximal_index) const;
  DynBitset expand(const SubgroupDescriptor& d) const;

  // canonical coset form; flags descriptors that admit no even rewrite
  SubgroupDescriptor normalized_cosets(const SubgroupDescriptor& d) const;

  struct Verification {
    bool distinct = false;
    bool families_are_orbits = false;
    bool maximality_verified = false;
    bool diagonal_nonmaximality_checked = false;  // odd case only
    std::string detail;
  };
  const Verification& verify_maximals() const;  // runs once, cached

  // index helpers over the G universe
  long long g_mul(long long a, long long b) const;
  long long g_inv(long long a) const;

private:
  void build_bases();
  void build_maximals();

  GroupSpec spec_;
  GroupUniverse universe_;
  std::vector<ProductBase> bases_;
  std::vector<SubgroupDescriptor> maximals_;
  bool certified_ = false;
  mutable std::vector<DynBitset> expanded_;
  mutable std::optional<Verification> verification_;
  mutable std::vector<MonolithElement> element_cache_;
  const std::vector<MonolithElement>& cached_elements() const;
};

}  // namespace covnum
