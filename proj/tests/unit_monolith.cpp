#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "covnum/monolith.hpp"

using namespace covnum;

namespace {

const GroupSpec kOdd52{5, 2, GroupCase::Odd};
const GroupSpec kEven52{5, 2, GroupCase::EvenWreath};

MonolithElement random_element(const GroupSpec& spec, std::mt19937& rng) {
  const auto& an = alternating_group(spec.n);
  std::uniform_int_distribution<std::size_t> pick(0, an.size() - 1);
  std::uniform_int_distribution<int> tw(0, spec.twist_modulus() - 1);
  MonolithElement e;
  for (int d = 0; d < spec.m; ++d) e.base.push_back(an[pick(rng)]);
  e.twist = tw(rng);
  return e;
}

}  // namespace

TEST_CASE("twist patterns") {
  GroupSpec s{5, 3, GroupCase::Odd};
  // k=1: tau at d > m-k = 2, i.e. position 3 only
  CHECK(twist_pattern(s, 1) == std::vector<bool>{false, false, true});
  // k=m: all; k=0: none
  CHECK(twist_pattern(s, 3) == std::vector<bool>{true, true, true});
  CHECK(twist_pattern(s, 0) == std::vector<bool>{false, false, false});
  // m<k<2m: d <= 2m-k
  CHECK(twist_pattern(s, 4) == std::vector<bool>{true, true, false});
  CHECK(twist_pattern(s, 5) == std::vector<bool>{true, false, false});
}

TEST_CASE("gamma powers at m=2") {
  // hand oracle: gamma = (1,tau)delta, gamma^2 = (tau,tau), gamma^4 = 1
  AmbientElement g2 = gamma_power(kOdd52, 2);
  Perm tau = Perm::from_cycles(5, "(12)");
  CHECK(g2.shift == 0);
  CHECK(g2.w == std::vector<Perm>{tau, tau});
  AmbientElement g4 = gamma_power(kOdd52, 4);
  CHECK(g4.shift == 0);
  CHECK(g4.w == std::vector<Perm>{Perm::identity(5), Perm::identity(5)});
  CHECK_THROWS_AS(gamma_power(kEven52, 1), std::domain_error);
}

TEST_CASE("in_group accepts and rejects by parity pattern") {
  // all-even with shift 0 -> twist 0
  AmbientElement a{{Perm::identity(5), Perm::identity(5)}, 0};
  auto e = in_group(kOdd52, a);
  REQUIRE(e.has_value());
  CHECK(e->twist == 0);

  // (even, odd) with shift 1 -> twist 1 (pattern {2})
  AmbientElement b{{Perm::from_cycles(5, "(123)"), Perm::from_cycles(5, "(12)")}, 1};
  auto e2 = in_group(kOdd52, b);
  REQUIRE(e2.has_value());
  CHECK(e2->twist == 1);
  CHECK(e2->base[0] == Perm::from_cycles(5, "(123)"));
  CHECK(e2->base[1].is_identity());

  // (odd, odd) with shift 1 -> rejected
  AmbientElement c{{Perm::from_cycles(5, "(12)"), Perm::from_cycles(5, "(12)")}, 1};
  CHECK_FALSE(in_group(kOdd52, c).has_value());

  // round trip through ambient expansion, exhaustively over twists
  std::mt19937 rng(5);
  for (int it = 0; it < 500; ++it) {
    MonolithElement e3 = random_element(kOdd52, rng);
    auto back = in_group(kOdd52, ambient_of(kOdd52, e3));
    REQUIRE(back.has_value());
    CHECK(*back == e3);
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(42);
  MonolithElement id = identity_element(kOdd52);
  for (int it = 0; it < 2000; ++it) {
    MonolithElement a = random_element(kOdd52, rng);
    MonolithElement b = random_element(kOdd52, rng);
    MonolithElement c = random_element(kOdd52, rng);
    CHECK(multiply(kOdd52, multiply(kOdd52, a, b), c) ==
          multiply(kOdd52, a, multiply(kOdd52, b, c)));
    CHECK(multiply(kOdd52, a, id) == a);
    CHECK(multiply(kOdd52, a, inverse(kOdd52, a)) == id);
    // inverse twist law: 2m - k mod 2m
    CHECK(inverse(kOdd52, a).twist == (4 - a.twist) % 4);
  }
  // even case too
  for (int it = 0; it < 500; ++it) {
    MonolithElement a = random_element(kEven52, rng);
    MonolithElement b = random_element(kEven52, rng);
    CHECK(multiply(kEven52, a, inverse(kEven52, a)) == identity_element(kEven52));
    CHECK(multiply(kEven52, a, b).twist == (a.twist + b.twist) % 2);
  }
}

TEST_CASE("twist map is a homomorphism onto the cyclic top") {
  std::mt19937 rng(1);
  for (int it = 0; it < 500; ++it) {
    MonolithElement a = random_element(kOdd52, rng);
    MonolithElement b = random_element(kOdd52, rng);
    CHECK(multiply(kOdd52, a, b).twist == (a.twist + b.twist) % 4);
  }
}

TEST_CASE("enumeration sizes and index round trip") {
  GroupUniverse even(kEven52);
  CHECK(even.size() == 7200);
  GroupUniverse odd(kOdd52);
  CHECK(odd.size() == 14400);
  GroupUniverse s5like({5, 1, GroupCase::Odd});
  CHECK(s5like.size() == 120);

  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> pick(0, odd.size() - 1);
  for (int it = 0; it < 300; ++it) {
    long long i = pick(rng);
    CHECK(odd.index_of(odd.element_at(i)) == i);
  }
  // exhaustive round trip at (5,2)-even
  for (long long i = 0; i < even.size(); ++i)
    CHECK(even.index_of(even.element_at(i)) == i);

  GroupSpec big{7, 2, GroupCase::Odd};
  CHECK_FALSE(big.enumerable());
  CHECK_THROWS_AS(GroupUniverse{big}, std::domain_error);
}

TEST_CASE("product invariant") {
  Perm tau = Perm::from_cycles(5, "(12)");
  // identity tuple * gamma -> single product tau
  MonolithElement e = identity_element(kOdd52);
  e.twist = 1;
  auto inv1 = product_invariant(kOdd52, e, 1);
  REQUIRE(inv1.size() == 1);
  CHECK(inv1[0] == tau);

  // (x1,x2)gamma -> x1 x2 tau, odd
  std::mt19937 rng(8);
  for (int it = 0; it < 200; ++it) {
    MonolithElement a = random_element(kOdd52, rng);
    a.twist = 1;
    auto p = product_invariant(kOdd52, a, 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == a.base[0].compose(a.base[1]).compose(tau));
    CHECK_FALSE(p[0].even());
    // twist-3 strand is also a single odd product
    a.twist = 3;
    auto p3 = product_invariant(kOdd52, a, 1);
    REQUIRE(p3.size() == 1);
    CHECK_FALSE(p3[0].even());
  }

  // (x1,x2)gamma^2: strands x1 tau and x2 tau
  MonolithElement b = random_element(kOdd52, rng);
  b.twist = 2;
  auto s2 = product_invariant(kOdd52, b, 2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == b.base[0].compose(tau));
  CHECK(s2[1] == b.base[1].compose(tau));

  // twist incompatible with r
  MonolithElement c = random_element(kOdd52, rng);
  c.twist = 2;
  CHECK_THROWS_AS(product_invariant(kOdd52, c, 1), std::invalid_argument);

  // m odd, twist 2: single chain x1 x3 ... x_m tau x2 x4 ... x_{m-1} tau
  GroupSpec odd53{5, 3, GroupCase::Odd};
  std::uniform_int_distribution<std::size_t> pick(0, alternating_group(5).size() - 1);
  MonolithElement d;
  for (int i = 0; i < 3; ++i) d.base.push_back(alternating_group(5)[pick(rng)]);
  d.twist = 2;
  auto chain = product_invariant(odd53, d, 2);
  REQUIRE(chain.size() == 1);
  Perm want = d.base[0].compose(d.base[2]).compose(tau).compose(d.base[1]).compose(tau);
  CHECK(chain[0] == want);
}

TEST_CASE("element types in the wreath case") {
  GroupUniverse even(kEven52);
  // (x, x^-1)eps has type 1
  const auto& an = alternating_group(5);
  MonolithElement e{{an[7], an[7].inverse()}, 1};
  CHECK(element_type(kEven52, e) == CycleType{{1, 1, 1, 1, 1}});
  MonolithElement f{{Perm::from_cycles(5, "(123)"), Perm::identity(5)}, 1};
  CHECK(element_type(kEven52, f) == CycleType{{3, 1, 1}});
  MonolithElement socle{{an[3], an[9]}, 0};
  CHECK_THROWS_AS(element_type(kEven52, socle), std::domain_error);

  // census over G - N: 60 / 1200 / 900 / 1440
  std::map<CycleType, long> census;
  for (long long i = 0; i < even.size(); ++i) {
    MonolithElement g = even.element_at(i);
    if (g.twist % 2 == 0) continue;
    census[element_type(kEven52, g)]++;
  }
  CHECK(census[CycleType{{1, 1, 1, 1, 1}}] == 60);
  CHECK(census[CycleType{{3, 1, 1}}] == 1200);
  CHECK(census[CycleType{{2, 2, 1}}] == 900);
  CHECK(census[CycleType{{5}}] == 1440);
}

TEST_CASE("m=1 odd case is the symmetric group in disguise") {
  GroupSpec s51{5, 1, GroupCase::Odd};
  GroupUniverse u(s51);
  CHECK(u.size() == 120);
  // (x)gamma^k <-> x tau^k is a bijection onto S_5; check products match
  std::mt19937 rng(77);
  Perm tau = Perm::from_cycles(5, "(12)");
  auto to_s5 = [&](const MonolithElement& e) {
    return e.twist % 2 ? e.base[0].compose(tau) : e.base[0];
  };
  for (int it = 0; it < 300; ++it) {
    MonolithElement a = random_element(s51, rng);
    MonolithElement b = random_element(s51, rng);
    CHECK(to_s5(multiply(s51, a, b)) == to_s5(a).compose(to_s5(b)));
  }
}
