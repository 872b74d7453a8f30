#include <gtest/gtest.h>

#include "cayley/catalog.hpp"
#include "cayley/invariants.hpp"
#include "cayley/kernel.hpp"
#include "oracle/naive.hpp"

using namespace cayley;

namespace {

GroupTable d8_from_perms() {
  return close_permutations(4, {from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 2}})});
}

}  // namespace

TEST(ClosePermutations, EmptyGenerationIsTrivial) {
  auto g = close_permutations(1, {});
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.generators().empty());
}

TEST(ClosePermutations, DihedralOfOrderEight) {
  auto gens = std::vector<Permutation>{from_cycles(4, {{0, 1, 2, 3}}), from_cycles(4, {{0, 2}})};
  auto g = close_permutations(4, gens);
  EXPECT_EQ(g.order(), oracle::permutation_closure(4, gens).size());
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(verify_table(g).ok);
  EXPECT_EQ(g.generators().size(), 2u);
}

TEST(ClosePermutations, SymmetricGroupS3) {
  auto gens = std::vector<Permutation>{from_cycles(3, {{0, 1}}), from_cycles(3, {{0, 1, 2}})};
  auto g = close_permutations(3, gens);
  EXPECT_EQ(g.order(), oracle::permutation_closure(3, gens).size());
  EXPECT_EQ(g.order(), 6u);
  EXPECT_TRUE(verify_table(g).ok);
  EXPECT_FALSE(is_abelian(g));
}

TEST(ClosePermutations, RejectsNonBijection) {
  EXPECT_THROW(close_permutations(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(close_permutations(3, {{0, 1}}), InputError);
  EXPECT_THROW(close_permutations(3, {{0, 1, 3}}), InputError);
}

TEST(ClosePermutations, EnforcesOrderCap) {
  auto gens = std::vector<Permutation>{from_cycles(5, {{0, 1}}), from_cycles(5, {{0, 1, 2, 3, 4}})};
  EXPECT_THROW(close_permutations(5, gens, 100), SizeError);
  EXPECT_EQ(close_permutations(5, gens, 120).order(), 120u);
}

TEST(Arithmetic, OutOfRangeIsInputError) {
  auto g = cyclic(4);
  EXPECT_THROW(multiply(g, 4, 0), InputError);
  EXPECT_THROW(inverse(g, 9), InputError);
  EXPECT_THROW(commutator(g, 0, 4), InputError);
}

TEST(Arithmetic, CommutatorOfElementWithItselfIsIdentity) {
  auto g = symmetric(4);
  for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(commutator(g, x, x), kIdentity);
}

TEST(Arithmetic, AbelianCommutatorsVanish) {
  auto g = direct_product(cyclic(4), cyclic(6));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) EXPECT_EQ(commutator(g, x, y), kIdentity);
}

TEST(Arithmetic, DihedralRotationReflectionCommutatorIsRotationSquared) {
  auto g = d8_from_perms();
  const Element r = g.generators()[0], s = g.generators()[1];
  ASSERT_EQ(element_order(g, r), 4u);
  ASSERT_EQ(element_order(g, s), 2u);
  EXPECT_EQ(commutator(g, r, s), g.mul(r, r));
  EXPECT_EQ(commutator(g, r, s), oracle::comm(g, r, s));

  auto d = dihedral(8);  // r = 1, s = 4, r^2 = 2
  EXPECT_EQ(commutator(d, 1, 4), 2u);
}

TEST(Arithmetic, InverseMatchesBruteForce) {
  auto g = alternating(5);
  for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(inverse(g, x), oracle::inv(g, x));
}

TEST(SubgroupClosure, EmptySeedGivesTrivialSubgroup) {
  auto g = dihedral(8);
  auto s = subgroup_closure(g, std::vector<Element>{});
  EXPECT_EQ(s.order(), 1u);
  EXPECT_TRUE(s.contains(kIdentity));
}

TEST(SubgroupClosure, RotationGeneratesCyclicSubgroupOfOrderFour) {
  auto g = dihedral(8);
  auto s = subgroup_closure(g, {1});
  EXPECT_EQ(oracle::as_set(s.members()), (oracle::ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(oracle::generated(g, {1}).size(), 4u);
}

TEST(SubgroupClosure, AllElementsGiveWholeGroup) {
  auto g = symmetric(4);
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  EXPECT_EQ(subgroup_closure(g, all).order(), g.order());
}

TEST(SubgroupClosure, IsIdempotentAndSatisfiesLagrange) {
  auto g = symmetric(4);
  for (Element a = 0; a < g.order(); a += 5)
    for (Element b = 0; b < g.order(); b += 7) {
      auto s = subgroup_closure(g, {a, b});
      auto t = subgroup_closure(g, s.members());
      EXPECT_EQ(oracle::as_set(s.members()), oracle::as_set(t.members()));
      EXPECT_EQ(g.order() % s.order(), 0u);
      EXPECT_EQ(oracle::as_set(s.members()), oracle::generated(g, {a, b}));
    }
}

TEST(SubgroupClosure, RejectsOutOfRangeSeed) {
  EXPECT_THROW(subgroup_closure(cyclic(3), {5}), InputError);
}

TEST(Quotient, ByTrivialSubgroupReproducesTable) {
  auto g = dihedral(8);
  auto q = quotient(g, trivial_subgroup(g));
  EXPECT_EQ(q.table.order(), g.order());
  EXPECT_TRUE(q.table == g);
  for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(q.rep(x), x);
}

TEST(Quotient, DihedralModCenterIsKleinFour) {
  auto g = dihedral(8);
  auto q = quotient(g, center(g));
  ASSERT_EQ(q.table.order(), 4u);
  for (Element x = 1; x < 4; ++x) EXPECT_EQ(element_order(q.table, x), 2u);
  EXPECT_TRUE(is_abelian(q.table));
  EXPECT_TRUE(q.projection.is_homomorphism());
  EXPECT_TRUE(q.projection.is_surjective());
  EXPECT_TRUE(verify_table(q.table).ok);
}

TEST(Quotient, SymmetricModAlternatingHasOrderTwo) {
  auto s3 = symmetric(3);
  std::vector<Element> even;
  for (Element x = 0; x < s3.order(); ++x)
    if (element_order(s3, x) != 2) even.push_back(x);
  auto a3 = subgroup_closure(s3, even);
  ASSERT_EQ(a3.order(), 3u);
  auto q = quotient(s3, a3);
  EXPECT_EQ(q.table.order(), 2u);
  // Kernel of the projection is exactly A3.
  for (Element x = 0; x < s3.order(); ++x) EXPECT_EQ(q.coset_of(x) == kIdentity, a3.contains(x));
}

TEST(Quotient, CosetRepresentativesAreMinimal) {
  auto g = symmetric(4);
  auto q = quotient(g, derived_subgroup(g));
  for (Element c = 0; c < q.table.order(); ++c)
    for (Element x = 0; x < g.order(); ++x)
      if (q.coset_of(x) == c) {
        EXPECT_EQ(q.rep(c), x);
        break;
      }
}

TEST(Quotient, NonNormalSubgroupNamesViolatingPair) {
  auto g = symmetric(3);
  Element t = kNoElement;
  for (Element x = 1; x < g.order(); ++x)
    if (element_order(g, x) == 2) t = x;
  auto h = subgroup_closure(g, {t});
  try {
    quotient(g, h);
    FAIL() << "expected NormalityError";
  } catch (const NormalityError& e) {
    const Element x = static_cast<Element>(e.g()), n = static_cast<Element>(e.n());
    EXPECT_TRUE(h.contains(n));
    EXPECT_FALSE(h.contains(g.mul(g.mul(x, n), g.inv(x))));
  }
}

TEST(DirectProduct, WithTrivialGroupIsSameTable) {
  auto g = symmetric(3);
  EXPECT_TRUE(direct_product(g, GroupTable{}) == g);
}

TEST(DirectProduct, KleinFourHasExponentTwo) {
  auto g = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(exponent(g), 2u);
}

TEST(DirectProduct, C2TimesD8HasCenterOfOrderFour) {
  auto g = direct_product(cyclic(2), dihedral(8));
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(oracle::center(g).size(), 4u);
  EXPECT_EQ(center(g).order(), 4u);
  EXPECT_TRUE(verify_table(g).ok);
}

TEST(DirectProduct, EnforcesCap) { EXPECT_THROW(direct_product(cyclic(100), cyclic(100), 5000), SizeError); }

TEST(VerifyTable, DetectsSwappedEntry) {
  auto g = symmetric(3);
  std::vector<std::uint16_t> mul(g.raw().begin(), g.raw().end());
  const std::size_t n = g.order();
  // Swap two entries of row 1 that avoid the identity column and value.
  std::size_t b = 0, c = 0;
  for (std::size_t y = 1; y < n && !c; ++y)
    if (mul[n + y] != 0) {
      if (!b) b = y;
      else c = y;
    }
  std::swap(mul[n + b], mul[n + c]);
  auto rep = verify_table(n, mul);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.first_violation.empty());
}

TEST(VerifyTable, ReportsBrokenIdentity) {
  std::vector<std::uint16_t> mul{1, 0, 0, 1};
  auto rep = verify_table(2, mul);
  EXPECT_FALSE(rep.ok);
  EXPECT_NE(rep.first_violation.find("identity"), std::string::npos);
  EXPECT_THROW(GroupTable::from_table(2, mul), InputError);
}

TEST(VerifyTable, RejectsOutOfRangeAndWrongShape) {
  EXPECT_FALSE(verify_table(2, std::vector<std::uint16_t>{0, 1, 1, 2}).ok);
  EXPECT_FALSE(verify_table(2, std::vector<std::uint16_t>{0, 1, 1}).ok);
  EXPECT_THROW(GroupTable::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0}), InputError);
}

TEST(Morphism, ComposeAndInvert) {
  auto g = cyclic(6);
  Morphism neg{g, g, {0, 5, 4, 3, 2, 1}};
  EXPECT_TRUE(neg.is_homomorphism());
  EXPECT_TRUE(neg.is_bijective());
  auto id = compose(neg, neg);
  EXPECT_EQ(id.map, Morphism::identity(g).map);
  EXPECT_EQ(neg.inverse().map, neg.map);
  Morphism bad{g, g, {0, 2, 1, 3, 4, 5}};
  EXPECT_FALSE(bad.is_homomorphism());
}

TEST(InducedTable, RoundTripsMembership) {
  auto g = symmetric(4);
  auto d = derived_subgroup(g);
  auto t = induced_table(d);
  EXPECT_EQ(t.table.order(), 12u);
  EXPECT_TRUE(verify_table(t.table).ok);
  for (Element i = 0; i < t.table.order(); ++i) EXPECT_EQ(t.from_parent[t.to_parent[i]], i);
}
