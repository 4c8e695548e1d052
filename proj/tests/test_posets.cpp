#include <doctest.h>

#include "omltopo/posets.hpp"
#include "test_helpers.hpp"

using namespace omltopo;
using omltopo::testing::chain_poset;
using omltopo::testing::diamond_poset;
using omltopo::testing::random_lower_mask;
using omltopo::testing::random_poset;

namespace {

Bitset mask_of(const FinitePoset& p, std::initializer_list<int> members) {
  Bitset mask(p.size());
  for (int x : members) mask.set(x);
  return mask;
}

Bitset full_mask(const FinitePoset& p) {
  Bitset mask(p.size());
  for (int x = 0; x < p.size(); ++x) mask.set(x);
  return mask;
}

}  // namespace

TEST_CASE("poset validation rejects broken axioms") {
  std::vector<std::uint8_t> cyclic{1, 1, 1, 1};  // 0 ≤ 1 and 1 ≤ 0
  CHECK_THROWS_AS(FinitePoset(2, cyclic), Error);

  std::vector<std::uint8_t> not_reflexive{0, 1, 0, 1};
  CHECK_THROWS_AS(FinitePoset(2, not_reflexive), Error);

  // 3-element V: two minimal elements, no least
  std::vector<std::uint8_t> no_bottom{1, 0, 1, 0, 1, 1, 0, 0, 1};
  CHECK_THROWS_AS(FinitePoset(3, no_bottom), Error);
}

TEST_CASE("atoms and down-sets on the diamond") {
  const FinitePoset p = diamond_poset();
  CHECK(p.bottom() == 0);
  CHECK(p.atoms() == std::vector<int>{1, 2});
  CHECK(p.atoms_below(3).to_indices() == std::vector<int>{1, 2});
  CHECK(p.down_set(3).count() == 4);
}

TEST_CASE("lower-set recognition") {
  const FinitePoset p = diamond_poset();
  CHECK(is_lower_set(p, mask_of(p, {0})));
  CHECK(is_lower_set(p, full_mask(p)));
  CHECK_FALSE(is_lower_set(p, mask_of(p, {3})));  // top without its atoms
  CHECK_THROWS_AS(LowerSet(p, mask_of(p, {3})), Error);
}

TEST_CASE("complement on small fixtures") {
  const FinitePoset p = diamond_poset();

  // ¬{⊥} is everything, ¬(everything) is {⊥}
  CHECK(LowerSet(p, mask_of(p, {0})).complement().members() == full_mask(p));
  CHECK(LowerSet(p, full_mask(p)).complement().members() == mask_of(p, {0}));

  // one atom flips to the other
  CHECK(LowerSet(p, mask_of(p, {0, 1})).complement().members() == mask_of(p, {0, 2}));
}

TEST_CASE("closure on small fixtures") {
  const FinitePoset p = diamond_poset();
  CHECK(LowerSet(p, mask_of(p, {0})).closure().members() == mask_of(p, {0}));
  CHECK(LowerSet(p, full_mask(p)).closure().members() == full_mask(p));
  // both atoms present forces the top into the closure
  CHECK(LowerSet(p, mask_of(p, {0, 1, 2})).closure().members() == full_mask(p));
}

TEST_CASE("lower-set algebra invariants on random posets") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    const FinitePoset p = random_poset(rng);
    const LowerSet lower(p, random_lower_mask(rng, p));
    const LowerSet neg = lower.complement();
    const LowerSet closed = lower.closure();

    CAPTURE(round);
    CHECK(is_lower_set(p, neg.members()));
    CHECK(lower.members().is_subset_of(closed.members()));
    CHECK(neg.complement().complement() == neg);  // ¬¬¬I = ¬I
    CHECK((lower.members() & neg.members()) == mask_of(p, {p.bottom()}));

    // atomic characterization: x ∈ ¬¬I iff At(x) ⊆ I
    for (int x = 0; x < p.size(); ++x) {
      const bool atoms_in = p.atoms_below(x).is_subset_of(lower.members());
      CHECK(closed.contains(x) == atoms_in);
    }
    // closure cannot move atoms, complement negates them
    for (int a : p.atoms()) {
      CHECK(closed.contains(a) == lower.contains(a));
      CHECK(neg.contains(a) == !lower.contains(a));
    }
  }
}

TEST_CASE("smashed product carriers") {
  const SmashedPoset two = smashed_product(chain_poset(2));
  CHECK(two.size() == 2);
  CHECK(two.poset().bottom() == 0);
  CHECK(two.poset().leq(0, 1));

  const SmashedPoset diamond = smashed_product(diamond_poset());
  CHECK(diamond.size() == 10);  // 3^2 + 1

  // atoms of the carrier are atom pairs of the base
  const auto& atoms = diamond.poset().atoms();
  CHECK(atoms.size() == 4);
  for (int idx : atoms) {
    const auto [a, b] = diamond.pair_at(idx);
    CHECK(diamond_poset().is_atom(a));
    CHECK(diamond_poset().is_atom(b));
  }

  // index map round-trips
  for (int idx = 0; idx < diamond.size(); ++idx) {
    const auto [a, b] = diamond.pair_at(idx);
    CHECK(diamond.index_of(a, b) == idx);
  }
  CHECK(diamond.index_of(0, 1) == -1);  // mixed-bottom pairs are not in the carrier
}

TEST_CASE("smashed product of a 6-element MO2-shaped poset has 26 elements") {
  // MO2 order only (bounds plus four incomparable middles)
  const int n = 6;
  std::vector<std::uint8_t> leq(36, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
  for (int i = 0; i < n; ++i) {
    leq[static_cast<std::size_t>(0) * n + i] = 1;
    leq[static_cast<std::size_t>(i) * n + (n - 1)] = 1;
  }
  const FinitePoset p(n, leq);
  CHECK(smashed_product(p).size() == 26);  // 5^2 + 1
}
