#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cayley/catalog.hpp"
#include "cayley/invariants.hpp"
#include "oracle/naive.hpp"

using namespace cayley;

namespace {

std::multiset<std::size_t> class_sizes(const ConjugacyClasses& c) {
  std::multiset<std::size_t> s;
  for (const auto& cl : c.classes) s.insert(cl.size());
  return s;
}

Element first_of_order(const GroupTable& g, std::uint64_t k) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == k) return x;
  return kNoElement;
}

}  // namespace

TEST(Center, AbelianGroupIsItsOwnCenter) {
  auto g = cyclic(12);
  EXPECT_EQ(center(g).order(), 12u);
}

TEST(Center, DihedralCenterIsRotationSquared) {
  auto g = dihedral(8);
  EXPECT_EQ(oracle::as_set(center(g).members()), (oracle::ElementSet{0, 2}));
  EXPECT_EQ(oracle::center(g), (oracle::ElementSet{0, 2}));
}

TEST(Center, SymmetricS3IsCenterless) {
  auto g = symmetric(3);
  EXPECT_EQ(center(g).order(), 1u);
  EXPECT_EQ(oracle::center(g).size(), 1u);
}

TEST(Centralizer, OfIdentityIsWholeGroup) {
  auto g = symmetric(4);
  EXPECT_EQ(centralizer(g, kIdentity).order(), 24u);
}

TEST(Centralizer, OfRotationInD8IsRotationSubgroup) {
  auto g = dihedral(8);
  EXPECT_EQ(oracle::as_set(centralizer(g, 1).members()), (oracle::ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(oracle::centralizer(g, 1), oracle::as_set(centralizer(g, 1).members()));
}

TEST(Centralizer, OfA3InS3IsA3) {
  auto g = symmetric(3);
  auto a3 = subgroup_closure(g, {first_of_order(g, 3)});
  auto c = centralizer_of_subgroup(g, a3);
  EXPECT_EQ(c, a3);
}

TEST(CommutatorData, AbelianGroup) {
  auto d = commutator_data(cyclic(7));
  EXPECT_EQ(d.classes.classes.size(), 7u);
  EXPECT_EQ(d.k, std::vector<Element>{0});
  EXPECT_EQ(d.gamma2.order(), 1u);
  EXPECT_EQ(d.breadth, 1u);
  EXPECT_TRUE(d.k_equals_gamma2);
}

TEST(CommutatorData, DihedralOfOrderEight) {
  auto g = dihedral(8);
  auto d = commutator_data(g);
  EXPECT_EQ(class_sizes(d.classes), (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(d.k, (std::vector<Element>{0, 2}));
  EXPECT_EQ(d.gamma2.order(), 2u);
  EXPECT_EQ(d.breadth, 2u);
  EXPECT_EQ(oracle::as_set(d.k), oracle::all_commutators(g));
}

TEST(CommutatorData, SymmetricS4) {
  auto g = symmetric(4);
  auto d = commutator_data(g);
  EXPECT_EQ(d.gamma2.order(), 12u);
  EXPECT_EQ(d.breadth, 8u);
  EXPECT_EQ(oracle::as_set(d.gamma2.members()), oracle::derived(g));
  EXPECT_EQ(oracle::as_set(d.gamma2.members()), oracle::as_set(derived_subgroup(g).members()));
}

TEST(CommutatorData, SetSizeEqualsClassSize) {
  for (const char* name : {"S4", "D12", "Q16", "ES(3,1,-)", "A5", "C2 x S3"}) {
    auto g = build(name);
    auto d = commutator_data(g);
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(d.commutator_sets[x].size(), d.class_size(x)) << name << " x=" << x;
      EXPECT_EQ(oracle::as_set(d.commutator_sets[x]), oracle::commutator_set(g, x));
    }
  }
}

TEST(CommutatorData, ClassesMatchOracle) {
  for (const char* name : {"S4", "Q8", "D10", "A4"}) {
    auto g = build(name);
    std::set<oracle::ElementSet> ours;
    for (const auto& c : conjugacy_classes(g).classes) ours.insert(oracle::as_set(c));
    EXPECT_EQ(ours, oracle::classes(g)) << name;
  }
}

TEST(CentralSeries, AbelianHasClassOne) {
  auto s = upper_central_series(cyclic(10));
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[0].order(), 1u);
  EXPECT_EQ(s.terms[1].order(), 10u);
  EXPECT_EQ(s.nilpotency_class, 1u);
}

TEST(CentralSeries, TrivialGroupHasClassOne) {
  auto s = upper_central_series(cyclic(1));
  EXPECT_EQ(s.nilpotency_class, 1u);
}

TEST(CentralSeries, DihedralOfOrderEight) {
  auto g = dihedral(8);
  auto s = upper_central_series(g);
  ASSERT_EQ(s.terms.size(), 3u);
  EXPECT_EQ(oracle::as_set(s.center().members()), (oracle::ElementSet{0, 2}));
  EXPECT_EQ(s.second_center().order(), 8u);
  EXPECT_EQ(s.nilpotency_class, 2u);
  EXPECT_EQ(oracle::as_set(s.second_center().members()), oracle::second_center(g));
}

TEST(CentralSeries, SymmetricS4IsNotNilpotent) {
  auto g = symmetric(4);
  auto s = upper_central_series(g);
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[1].order(), 1u);
  EXPECT_FALSE(s.nilpotent());
  EXPECT_EQ(s.second_center().order(), 1u);
}

TEST(CentralSeries, Q16HasClassThree) {
  auto s = upper_central_series(quaternion(16));
  EXPECT_EQ(s.nilpotency_class, 3u);
}

TEST(Exponent, Examples) {
  auto d8 = dihedral(8);
  EXPECT_EQ(exponent(d8, trivial_subgroup(d8)), 1u);
  EXPECT_EQ(exponent(d8, commutator_set_subgroup(d8, 1)), 2u);
  auto s3 = symmetric(3);
  EXPECT_EQ(exponent(s3, subgroup_closure(s3, {first_of_order(s3, 3)})), 3u);
  EXPECT_EQ(exponent(cyclic(12)), 12u);
}

TEST(CommutatorSetSubgroup, CentralElementGivesTrivial) {
  auto g = dihedral(8);
  EXPECT_EQ(commutator_set_subgroup(g, 2).order(), 1u);
}

TEST(CommutatorSetSubgroup, RotationInD8) {
  auto g = dihedral(8);
  EXPECT_EQ(oracle::as_set(commutator_set_subgroup(g, 1).members()), (oracle::ElementSet{0, 2}));
}

TEST(CommutatorSetSubgroup, TranspositionInS4IsHypothesisError) {
  auto g = symmetric(4);
  EXPECT_THROW(commutator_set_subgroup(g, g.generators()[0]), HypothesisError);
}

TEST(AbelianBasis, TrivialQuotient) {
  auto g = cyclic(5);
  auto b = abelian_basis(quotient(g, whole_group(g)));
  EXPECT_TRUE(b.basis.empty());
  EXPECT_TRUE(b.orders.empty());
}

TEST(AbelianBasis, SecondCenterModCenterOfD8IsKlein) {
  auto g = dihedral(8);
  auto s = upper_central_series(g);
  auto b = abelian_basis(quotient(g, s.center()));
  EXPECT_EQ(b.orders, (std::vector<std::uint64_t>{2, 2}));
}

TEST(AbelianBasis, C12ByTrivial) {
  auto g = cyclic(12);
  auto b = abelian_basis(quotient(g, trivial_subgroup(g)));
  EXPECT_EQ(b.orders, (std::vector<std::uint64_t>{12}));
}

TEST(AbelianBasis, InvariantFactorsOfMixedProduct) {
  auto g = build("C2 x C4 x C6");
  auto b = abelian_basis(quotient(g, trivial_subgroup(g)));
  EXPECT_EQ(b.orders, (std::vector<std::uint64_t>{12, 2, 2}));
}

TEST(AbelianBasis, NonAbelianQuotientIsInputError) {
  auto g = symmetric(3);
  EXPECT_THROW(abelian_basis(quotient(g, trivial_subgroup(g))), InputError);
}

TEST(GeneratingCosets, Examples) {
  auto c = cyclic(3);
  EXPECT_TRUE(generating_cosets(quotient(c, whole_group(c))).empty());

  auto d8 = dihedral(8);
  auto q = quotient(d8, center(d8));
  auto reps = generating_cosets(q);
  EXPECT_EQ(reps.size(), 2u);
  std::vector<Element> cosets;
  for (Element x : reps) cosets.push_back(q.coset_of(x));
  EXPECT_EQ(subgroup_closure(q.table, cosets).order(), 4u);

  auto s3 = symmetric(3);
  auto r3 = generating_cosets(quotient(s3, trivial_subgroup(s3)));
  EXPECT_EQ(r3.size(), 2u);
  EXPECT_EQ(oracle::generated(s3, oracle::as_set(r3)).size(), 6u);
}
