#include "covnum/monolith.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covnum {

namespace {

Perm tau_of(int n) { return Perm::from_cycles(n, "(12)"); }

void require_same_spec(const GroupSpec& spec, const MonolithElement& e) {
  if (int(e.base.size()) != spec.m)
    throw std::invalid_argument("monolith: element does not match spec (m)");
  for (const Perm& p : e.base)
    if (p.n() != spec.n) throw std::invalid_argument("monolith: element does not match spec (n)");
}

}  // namespace

long long GroupSpec::order() const {
  if (n < 5) throw std::invalid_argument("GroupSpec: n >= 5 required");
  if (m < 1) throw std::invalid_argument("GroupSpec: m >= 1 required");
  long long an = factorial_small(n) / 2;
  long long total = twist_modulus();
  for (int i = 0; i < m; ++i) {
    if (total > (long long)4e18 / an) throw std::overflow_error("GroupSpec: order overflow");
    total *= an;
  }
  return total;
}

bool GroupSpec::enumerable() const {
  try {
    return order() <= kEnumerationGuard;
  } catch (const std::overflow_error&) {
    return false;
  }
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  os << "(" << n << "," << m << ")-" << (kase == GroupCase::Odd ? "odd" : "even-wreath");
  return os.str();
}

std::string MonolithElement::str(const GroupSpec& spec) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) os << ",";
    os << base[i].cycles();
  }
  os << ")";
  const char* gen = spec.kase == GroupCase::Odd ? "g" : "d";
  os << "*" << gen << "^" << twist;
  return os.str();
}

std::vector<bool> twist_pattern(const GroupSpec& spec, int k) {
  int m = spec.m;
  std::vector<bool> pat(m, false);
  if (spec.kase == GroupCase::EvenWreath) return pat;  // no tau anywhere
  k = ((k % (2 * m)) + 2 * m) % (2 * m);
  for (int d = 1; d <= m; ++d) {
    if (k == 0)
      pat[d - 1] = false;
    else if (k == m)
      pat[d - 1] = true;
    else if (k < m)
      pat[d - 1] = d > m - k;
    else
      pat[d - 1] = d <= 2 * m - k;
  }
  return pat;
}

AmbientElement gamma_power(const GroupSpec& spec, int k) {
  if (spec.kase != GroupCase::Odd)
    throw std::domain_error("gamma_power: gamma exists only in the Odd case");
  AmbientElement a;
  a.shift = ((k % spec.m) + spec.m) % spec.m;
  std::vector<bool> pat = twist_pattern(spec, k);
  Perm tau = tau_of(spec.n);
  Perm id = Perm::identity(spec.n);
  for (int d = 0; d < spec.m; ++d) a.w.push_back(pat[d] ? tau : id);
  return a;
}

AmbientElement ambient_of(const GroupSpec& spec, const MonolithElement& e) {
  require_same_spec(spec, e);
  AmbientElement a;
  a.shift = e.twist % spec.m;
  std::vector<bool> pat = twist_pattern(spec, e.twist);
  Perm tau = tau_of(spec.n);
  for (int d = 0; d < spec.m; ++d)
    a.w.push_back(pat[d] ? e.base[d].compose(tau) : e.base[d]);
  return a;
}

std::optional<MonolithElement> in_group(const GroupSpec& spec, const AmbientElement& a) {
  if (int(a.w.size()) != spec.m) throw std::invalid_argument("in_group: wrong arity");
  int m = spec.m;
  int shift = ((a.shift % m) + m) % m;
  if (spec.kase == GroupCase::EvenWreath) {
    for (const Perm& p : a.w)
      if (!p.even()) return std::nullopt;
    return MonolithElement{a.w, shift};
  }
  std::vector<bool> par(m);
  for (int d = 0; d < m; ++d) par[d] = !a.w[d].even();
  Perm tau = tau_of(spec.n);
  for (int k : {shift, shift + m}) {
    if (twist_pattern(spec, k) != par) continue;
    MonolithElement e;
    e.twist = k;
    std::vector<bool> pat = twist_pattern(spec, k);
    for (int d = 0; d < m; ++d)
      e.base.push_back(pat[d] ? a.w[d].compose(tau) : a.w[d]);
    return e;
  }
  return std::nullopt;
}

MonolithElement identity_element(const GroupSpec& spec) {
  MonolithElement e;
  e.base.assign(std::size_t(spec.m), Perm::identity(spec.n));
  e.twist = 0;
  return e;
}

MonolithElement multiply(const GroupSpec& spec, const MonolithElement& a,
                         const MonolithElement& b) {
  require_same_spec(spec, a);
  require_same_spec(spec, b);
  AmbientElement wa = ambient_of(spec, a);
  AmbientElement wb = ambient_of(spec, b);
  int m = spec.m;
  AmbientElement prod;
  prod.shift = (wa.shift + wb.shift) % m;
  prod.w.reserve(std::size_t(m));
  // ((w)delta^s)((v)delta^t) = (w_d v_{d+s}) delta^(s+t)
  for (int d = 0; d < m; ++d) prod.w.push_back(wa.w[d].compose(wb.w[(d + wa.shift) % m]));
  auto e = in_group(spec, prod);
  if (!e) throw std::logic_error("multiply: product left the group");
  // recover the twist exactly: twists add mod the modulus
  int mod = spec.twist_modulus();
  int want = (a.twist + b.twist) % mod;
  if (e->twist != want) throw std::logic_error("multiply: twist mismatch");
  return *e;
}

MonolithElement inverse(const GroupSpec& spec, const MonolithElement& a) {
  require_same_spec(spec, a);
  AmbientElement wa = ambient_of(spec, a);
  int m = spec.m;
  AmbientElement inv;
  inv.shift = (m - wa.shift) % m;
  inv.w.assign(std::size_t(m), Perm::identity(spec.n));
  // ((w)delta^s)^-1 = (v)delta^-s with v_d = w_{d-s}^{-1} at position (d-s)+s = d
  for (int d = 0; d < m; ++d) inv.w[(d + wa.shift) % m] = wa.w[d].inverse();
  auto e = in_group(spec, inv);
  if (!e) throw std::logic_error("inverse: left the group");
  return *e;
}

std::vector<Perm> product_invariant(const GroupSpec& spec, const MonolithElement& e,
                                    int r) {
  require_same_spec(spec, e);
  int m = spec.m;
  int k = e.twist;
  bool ok = false;
  if (r == 1) {
    ok = std::gcd(k, spec.twist_modulus()) == 1;
  } else if (r >= 1 && m % r == 0 && k == r) {
    ok = true;
  } else if (r == 2 && m % 2 == 1 && k == 2) {
    ok = true;
  }
  if (!ok) throw std::invalid_argument("product_invariant: twist incompatible with r");
  AmbientElement a = ambient_of(spec, e);
  int step = k % m;
  int g = std::gcd(step == 0 ? m : step, m);
  int strands = (step == 0) ? m : g;
  std::vector<Perm> out;
  for (int i = 0; i < strands; ++i) {
    Perm prod = Perm::identity(spec.n);
    int d = i;
    for (int t = 0; t < m / strands; ++t) {
      prod = prod.compose(a.w[d]);
      d = (d + step) % m;
    }
    out.push_back(prod);
  }
  return out;
}

CycleType element_type(const GroupSpec& spec, const MonolithElement& e) {
  if (spec.kase != GroupCase::EvenWreath || spec.m != 2)
    throw std::domain_error("element_type: defined for the (n,2) wreath case");
  if (e.twist % 2 == 0) throw std::domain_error("element_type: socle element has no type");
  return e.base[0].compose(e.base[1]).cycle_type();
}

GroupUniverse::GroupUniverse(const GroupSpec& spec) : spec_(spec) {
  if (!spec.enumerable())
    throw std::domain_error("GroupUniverse: order exceeds the enumeration guard");
  size_ = spec.order();
  an_ = alternating_group(spec.n);
  rank_table_.assign(std::size_t(factorial_small(spec.n)), -1);
  for (std::size_t i = 0; i < an_.size(); ++i) rank_table_[std::size_t(an_[i].lex_rank())] = int32_t(i);
}

long long GroupUniverse::index_of(const MonolithElement& e) const {
  if (int(e.base.size()) != spec_.m) throw std::invalid_argument("index_of: wrong arity");
  long long idx = e.twist;
  for (const Perm& p : e.base) {
    int r = an_rank(p);
    if (r < 0) throw std::invalid_argument("index_of: base permutation is odd");
    idx = idx * (long long)an_.size() + r;
  }
  return idx;
}

MonolithElement GroupUniverse::element_at(long long idx) const {
  MonolithElement e;
  e.base.assign(std::size_t(spec_.m), Perm::identity(spec_.n));
  for (int d = spec_.m - 1; d >= 0; --d) {
    e.base[std::size_t(d)] = an_[std::size_t(idx % (long long)an_.size())];
    idx /= (long long)an_.size();
  }
  e.twist = int(idx);
  return e;
}

}  // namespace covnum
