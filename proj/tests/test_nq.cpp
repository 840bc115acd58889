#include <gtest/gtest.h>

#include "groups.hpp"
#include "hall_basis.hpp"
#include "hinv/nilpotent_quotient.hpp"
#include "hinv/pc_subgroup.hpp"

using namespace hinv;
using namespace hinv::testing;

namespace {

std::vector<std::size_t> free_ranks(const NilpotentQuotient &q) {
  std::vector<std::size_t> r;
  for (const auto &l : q.layers())
    r.push_back(l.free_rank);
  return r;
}

void expect_valid_epimorphism(const NilpotentQuotient &q) {
  EXPECT_TRUE(q.pc().is_consistent());
  for (const FreeWord &r : q.source().relators())
    EXPECT_TRUE(q.pc().is_identity(q.evaluate(r)));
  for (std::size_t l = 0; l < q.pc().size(); ++l)
    EXPECT_EQ(q.evaluate(q.preimages()[l]), q.pc().unit(l)) << "pc generator " << l;
}

} // namespace

TEST(HallBasis, KnownCounts) {
  EXPECT_EQ(basic_commutator_counts(2, 6), (std::vector<int>{2, 1, 2, 3, 6, 9}));
  EXPECT_EQ(basic_commutator_counts(3, 4), (std::vector<int>{3, 3, 8, 18}));
}

TEST(HallBasis, AgreesWithWittFormula) {
  for (int r = 1; r <= 4; ++r) {
    auto counts = basic_commutator_counts(r, 5);
    for (int w = 1; w <= 5; ++w)
      EXPECT_EQ(Integer(counts[w - 1]), witt_number(r, w));
  }
}

TEST(NilpotentQuotient, FreeRankTwoClassFive) {
  NilpotentQuotient q = nilpotent_quotient(free_group(2), 5);
  auto counts = basic_commutator_counts(2, 5);
  std::vector<std::size_t> expected(counts.begin(), counts.end());
  EXPECT_EQ(free_ranks(q), expected);
  for (const auto &l : q.layers())
    EXPECT_TRUE(l.torsion.empty());
  EXPECT_EQ(q.pc().hirsch_length(), 14u);
  expect_valid_epimorphism(q);
}

TEST(NilpotentQuotient, FreeRankThreeClassThree) {
  NilpotentQuotient q = nilpotent_quotient(free_group(3), 3);
  auto counts = basic_commutator_counts(3, 3);
  EXPECT_EQ(free_ranks(q), std::vector<std::size_t>(counts.begin(), counts.end()));
  expect_valid_epimorphism(q);
}

TEST(NilpotentQuotient, FreeAbelianStabilizes) {
  FpPresentation z2({"x", "y"}, {commutator(gen(0), gen(1))});
  for (int c : {1, 2, 4}) {
    NilpotentQuotient q = nilpotent_quotient(z2, c);
    EXPECT_EQ(q.pc().size(), 2u);
    EXPECT_EQ(q.pc().hirsch_length(), 2u);
    EXPECT_EQ(q.stabilized(), c > 1);
  }
}

TEST(NilpotentQuotient, TrefoilIsZ) {
  NilpotentQuotient q = nilpotent_quotient(trefoil(), 3);
  EXPECT_EQ(q.pc().size(), 1u);
  EXPECT_EQ(q.pc().hirsch_length(), 1u);
  EXPECT_TRUE(q.stabilized());
  expect_valid_epimorphism(q);
}

// Independent route: F2/gamma_4 modulo the normal closure of the trefoil relator.
TEST(NilpotentQuotient, TrefoilAgreesWithFreeQuotientModRelator) {
  NilpotentQuotient f = nilpotent_quotient(free_group(2), 3);
  const PcPresentation &pc = f.pc();
  PcElement r = f.evaluate(trefoil().relators()[0]);
  PcSubgroup<> normal(pc);
  normal.add_generator(r);
  // Normal closure in a nilpotent group: close under commutators with generators.
  std::vector<PcElement> frontier{r};
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<PcElement> next;
    for (const auto &e : frontier)
      for (std::size_t g = 0; g < pc.size(); ++g) {
        PcElement c = pc.commutator(e, pc.unit(g));
        normal.add_generator(c);
        next.push_back(c);
      }
    frontier = next;
  }
  normal.close();
  std::size_t covered_infinite = 0;
  for (auto &[d, t] : normal.table()) {
    EXPECT_EQ(t.elem[d], 1);
    covered_infinite += pc.order(d) == 0;
  }
  EXPECT_EQ(pc.hirsch_length() - covered_infinite, 1u);
}

TEST(NilpotentQuotient, InfiniteDihedralHasTwoTorsionLayers) {
  FpPresentation d({"x", "y"}, {gen(0, 2), gen(1, 2)});
  NilpotentQuotient q = nilpotent_quotient(d, 4);
  auto layers = q.layers();
  ASSERT_EQ(layers.size(), 4u);
  EXPECT_EQ(layers[0].to_string(), "Z/2 + Z/2");
  for (int w = 1; w < 4; ++w)
    EXPECT_EQ(layers[w].to_string(), "Z/2");
  expect_valid_epimorphism(q);
}

TEST(NilpotentQuotient, TruncationMatchesLowerClass) {
  NilpotentQuotient q4 = nilpotent_quotient(free_group(2), 4);
  NilpotentQuotient q2 = nilpotent_quotient(free_group(2), 2);
  NilpotentQuotient t = q4.truncate(2);
  EXPECT_EQ(t.pc(), q2.pc());
  EXPECT_EQ(t.images(), q2.images());
}

TEST(NilpotentQuotient, MixedTorsion) {
  // <x,y | x^4, [x,y]^2 > : abelianization Z/4 + Z
  FpPresentation p({"x", "y"}, {gen(0, 4), commutator(gen(0), gen(1)).pow(2)});
  NilpotentQuotient q = nilpotent_quotient(p, 3);
  EXPECT_EQ(q.layers()[0].to_string(), "Z + Z/4");
  expect_valid_epimorphism(q);
}
