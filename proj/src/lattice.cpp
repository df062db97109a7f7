#include "covnum/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace covnum {

namespace {

bool is_prime_power(int x) {
  if (x < 2) return x == 1;  // identity counts as order 1
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1;
    }
  }
  return true;  // prime
}

}  // namespace

const SnLattice& SnLattice::instance(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SnLattice>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto lat = std::unique_ptr<SnLattice>(new SnLattice(n));
    it = cache.emplace(n, std::move(lat)).first;
  }
  return *it->second;
}

SnLattice::SnLattice(int n) : n_(n) {
  if (n < 2 || n > 7) throw std::domain_error("SnLattice: supported for 2 <= n <= 7");
  build();
}

int SnLattice::element_index(const Perm& p) const { return int(p.lex_rank()); }

DynBitset SnLattice::conjugate_set(const DynBitset& sub, int g) const {
  DynBitset out(order_);
  int gi = inv(g);
  for (std::size_t e = sub.find_first(); e != DynBitset::npos; e = sub.find_next(e))
    out.set(std::size_t(mul(mul(gi, int(e)), g)));
  return out;
}

DynBitset SnLattice::normalizer(const DynBitset& sub) const {
  DynBitset out(order_);
  for (std::size_t g = 0; g < order_; ++g)
    if (conjugate_set(sub, int(g)) == sub) out.set(g);
  return out;
}

void SnLattice::build() {
  sn_ = symmetric_group(n_);
  order_ = sn_.size();
  table_.assign(order_ * order_, 0);
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b)
      table_[a * order_ + b] = uint16_t(sn_[a].compose(sn_[b]).lex_rank());
    inv_[a] = uint16_t(sn_[a].inverse().lex_rank());
  }
  prime_power_.assign(order_, false);
  an_mask_ = DynBitset(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    prime_power_[a] = is_prime_power(sn_[a].order());
    if (sn_[a].even()) an_mask_.set(a);
  }
  const int id = 0;  // identity sorts first
  const std::size_t half_sn = order_ / 2;
  const std::size_t half_an = order_ / 4;

  // closure of <gens>; returns 0 normally. If the subgroup provably equals
  // S_n (resp. A_n when all generators are even) it may stop early and
  // return +1 (full S_n) or +2 (full A_n) without filling `out` completely.
  auto closure = [&](const std::vector<int>& gens, DynBitset& out, int& count) -> int {
    bool all_even = true;
    for (int g : gens)
      if (!an_mask_.test(std::size_t(g))) all_even = false;
    std::size_t limit = all_even ? half_an : half_sn;
    out = DynBitset(order_);
    out.set(std::size_t(id));
    count = 1;
    std::vector<int> frontier{id};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int g : gens) {
          int y = mul(x, g);
          if (!out.test(std::size_t(y))) {
            out.set(std::size_t(y));
            ++count;
            if (std::size_t(count) > limit) return all_even ? 2 : 1;
            next.push_back(y);
          }
        }
      }
      frontier.swap(next);
    }
    return 0;
  };

  struct ClassRep {
    int sub_index;
    std::vector<int> gens;
    bool proper_ext_sn = false;  // some <H,g> proper in S_n
    bool proper_ext_an = false;  // some <H,g> with g even, proper in A_n
  };

  std::unordered_map<uint64_t, std::vector<int>> seen;  // bitset hash -> sub indices
  std::vector<ClassRep> reps;
  int next_class = 0;

  auto lookup = [&](const DynBitset& b) -> int {
    auto it = seen.find(b.hash());
    if (it == seen.end()) return -1;
    for (int idx : it->second)
      if (subs_[std::size_t(idx)].elems == b) return idx;
    return -1;
  };

  // register the whole conjugacy class of `b`; returns rep subgroup index
  auto register_class = [&](const DynBitset& b, int order, const std::vector<int>& gens) -> int {
    int cid = next_class++;
    int rep_index = int(subs_.size());
    // orbit under conjugation by coset representatives
    DynBitset coset_done(order_);
    for (std::size_t g = 0; g < order_; ++g) {
      if (coset_done.test(g)) continue;
      DynBitset img = conjugate_set(b, int(g));
      // mark the right coset (subgroup elements) * g: K^(kg) = K^g
      for (std::size_t e = b.find_first(); e != DynBitset::npos; e = b.find_next(e))
        coset_done.set(std::size_t(mul(int(e), int(g))));
      if (lookup(img) >= 0) continue;
      LatticeSubgroup s;
      s.order = order;
      s.class_id = cid;
      s.contained_in_an = img.is_subset_of(an_mask_);
      s.elems = img;
      if (img == b) s.generators = gens;
      int idx = int(subs_.size());
      seen[img.hash()].push_back(idx);
      subs_.push_back(std::move(s));
    }
    // rep = the first registered member equal to b
    int found = lookup(b);
    if (found < 0) throw std::logic_error("lattice: class registration lost its rep");
    (void)rep_index;
    return found;
  };

  // trivial subgroup
  {
    DynBitset triv(order_);
    triv.set(std::size_t(id));
    LatticeSubgroup s;
    s.elems = triv;
    s.order = 1;
    s.class_id = next_class++;
    s.contained_in_an = true;
    seen[triv.hash()].push_back(0);
    subs_.push_back(std::move(s));
    reps.push_back(ClassRep{0, {}, false, false});
  }

  // full groups, registered up front so extensions can reference them
  DynBitset full(order_);
  for (std::size_t g = 0; g < order_; ++g) full.set(g);
  int full_index, an_index;
  {
    LatticeSubgroup s;
    s.elems = full;
    s.order = int(order_);
    s.class_id = next_class++;
    s.contained_in_an = false;
    full_index = int(subs_.size());
    seen[full.hash()].push_back(full_index);
    subs_.push_back(std::move(s));

    LatticeSubgroup a;
    a.elems = an_mask_;
    a.order = int(order_ / 2);
    a.class_id = next_class++;
    a.contained_in_an = true;
    an_index = int(subs_.size());
    seen[an_mask_.hash()].push_back(an_index);
    subs_.push_back(std::move(a));
  }
  std::vector<bool> an_proper_ext(1, false);  // parallel to reps: A_n rep handled manually
  // A_n as a rep still needs extension processing (its overgroups in S_n);
  // treat it like any discovered class below by queueing it.
  std::queue<int> work;
  work.push(0);  // trivial rep
  {
    // A_n's generators: two even elements generating A_n
    std::vector<int> gens;
    for (std::size_t g = 1; g < order_ && gens.size() < 2; ++g) {
      if (!an_mask_.test(g)) continue;
      if (gens.empty()) {
        if (sn_[g].cycle_type().parts[0] == 3) gens.push_back(int(g));
      } else {
        std::vector<int> cand = gens;
        cand.push_back(int(g));
        DynBitset tmp;
        int cnt = 0;
        if (closure(cand, tmp, cnt) == 2 || (cnt == int(order_ / 2))) gens.push_back(int(g));
        else cand.pop_back();
      }
    }
    reps.push_back(ClassRep{an_index, gens, false, false});
    work.push(1);
  }

  while (!work.empty()) {
    int rep_pos = work.front();
    work.pop();
    ClassRep& rep = reps[std::size_t(rep_pos)];
    const DynBitset H = subs_[std::size_t(rep.sub_index)].elems;  // copy: subs_ may grow
    const int h_order = subs_[std::size_t(rep.sub_index)].order;
    if (h_order == int(order_)) continue;
    DynBitset coset_done(order_);
    for (std::size_t g = 0; g < order_; ++g) {
      if (H.test(g) || coset_done.test(g)) continue;
      // mark coset H*g
      for (std::size_t e = H.find_first(); e != DynBitset::npos; e = H.find_next(e))
        coset_done.set(std::size_t(mul(int(e), int(g))));
      if (!prime_power_[g]) continue;
      std::vector<int> gens = rep.gens;
      gens.push_back(int(g));
      DynBitset K;
      int cnt = 0;
      int state = closure(gens, K, cnt);
      bool g_even = an_mask_.test(g);
      if (state == 1) {
        continue;  // <H,g> = S_n: not a proper extension
      }
      if (state == 2) {
        // <H,g> = A_n: proper in S_n, full in A_n
        rep.proper_ext_sn = true;
        continue;
      }
      // exact proper subgroup K
      rep.proper_ext_sn = true;
      if (g_even && subs_[std::size_t(rep.sub_index)].contained_in_an &&
          cnt != int(order_ / 2))
        rep.proper_ext_an = true;
      if (lookup(K) < 0) {
        int new_rep = register_class(K, cnt, gens);
        reps.push_back(ClassRep{new_rep, gens, false, false});
        work.push(int(reps.size()) - 1);
      }
    }
  }
  (void)an_proper_ext;

  // maximality flags by class
  std::unordered_map<int, std::pair<bool, bool>> class_flags;  // class -> (max_sn, max_an)
  for (const ClassRep& rep : reps) {
    const LatticeSubgroup& s = subs_[std::size_t(rep.sub_index)];
    bool proper_in_sn = s.order < int(order_);
    bool max_sn = proper_in_sn && !rep.proper_ext_sn;
    bool max_an = s.contained_in_an && s.order < int(order_ / 2) && !rep.proper_ext_an;
    class_flags[s.class_id] = {max_sn, max_an};
  }
  // full S_n itself is not proper; A_n handled via its rep above.
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    auto it = class_flags.find(subs_[i].class_id);
    if (it == class_flags.end()) continue;
    if (it->second.first) max_sn_.push_back(int(i));
    if (it->second.second) max_an_.push_back(int(i));
  }
  std::sort(max_sn_.begin(), max_sn_.end());
  std::sort(max_an_.begin(), max_an_.end());
  (void)full_index;
}

}  // namespace covnum
