#include <gtest/gtest.h>

#include <random>

#include "groups.hpp"
#include "hinv/isomorphism.hpp"

using namespace hinv;
using namespace hinv::testing;

namespace {

std::shared_ptr<const RelativeQuotient> share(RelativeQuotient q) {
  return std::make_shared<const RelativeQuotient>(std::move(q));
}

// <g1,g2,g3 | [g2,g1] = g3>, g3 central of weight 2.
PcPresentation heisenberg() {
  PcPresentation p({"g1", "g2", "g3"}, {0, 0, 0}, {1, 1, 2});
  p.set_commutator(1, 0, {0, 0, 1});
  p.finalize();
  return p;
}

QuotientHom word_map(const RelativeQuotient &QA, std::shared_ptr<const RelativeQuotient> QB,
                     std::vector<FreeWord> imgs) {
  std::vector<RqElement> e;
  for (const FreeWord &w : imgs)
    e.push_back(QB->project(w));
  return QuotientHom(QA.source().pi(), QB, e);
}

void expect_group_axioms(const RelativeQuotient &q, int rank, unsigned seed) {
  std::mt19937 rng(seed);
  for (int k = 0; k < 25; ++k) {
    auto a = q.project(random_word(rng, rank, 6));
    auto b = q.project(random_word(rng, rank, 6));
    auto c = q.project(random_word(rng, rank, 6));
    EXPECT_EQ(q.multiply(q.multiply(a, b), c), q.multiply(a, q.multiply(b, c)));
    EXPECT_TRUE(q.is_identity(q.multiply(a, q.inverse(a))));
    EXPECT_TRUE(q.is_identity(q.multiply(q.inverse(a), a)));
    EXPECT_EQ(q.multiply(q.identity(), a), a);
  }
}

void expect_projection_paths_agree(const RelativeQuotient &q, unsigned seed) {
  std::mt19937 rng(seed);
  const int rank = q.source().pi().rank();
  for (int k = 0; k < 40; ++k) {
    FreeWord w = random_word(rng, rank, 12);
    auto a = q.project(w);
    EXPECT_EQ(a, q.project_direct(w)) << w.length();
    EXPECT_EQ(q.G().index(q.source().gamma_of(w)), a.g);
    EXPECT_EQ(q.project(q.lift(a)), a);
  }
  for (const FreeWord &r : q.source().pi().relators())
    EXPECT_TRUE(q.is_identity(q.project(r)));
}

} // namespace

TEST(RelativeQuotient, FreeGroupTrivialGLevelThreeIsHeisenberg) {
  auto q = relative_quotient(over_trivial(free_group(2)), 3);
  EXPECT_EQ(q.hirsch_length(), 3u);
  auto l = q.layers();
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0].to_string(), "Z^2");
  EXPECT_EQ(l[1].to_string(), "Z");
  expect_group_axioms(q, 2, 1);
  expect_projection_paths_agree(q, 2);
}

TEST(RelativeQuotient, TrefoilLevelTwoIsZ) {
  auto q = relative_quotient(over_trivial(trefoil()), 2);
  EXPECT_EQ(q.hirsch_length(), 1u);
  EXPECT_EQ(q.layers()[0].to_string(), "Z");
  expect_projection_paths_agree(q, 3);
}

TEST(RelativeQuotient, FreeGroupOverZ2LevelTwo) {
  auto q = relative_quotient(free2_over_cyclic(2), 2);
  EXPECT_EQ(q.hirsch_length(), 3u);
  EXPECT_EQ(q.layers()[0].to_string(), "Z^3");
  expect_group_axioms(q, 2, 4);
  expect_projection_paths_agree(q, 5);
}

TEST(RelativeQuotient, FreeGroupOverZ3LevelThree) {
  auto q = relative_quotient(free2_over_cyclic(3), 3);
  // Kernel is free of rank 4: layers Z^4 and Z^6.
  EXPECT_EQ(q.hirsch_length(), 10u);
  expect_group_axioms(q, 2, 6);
  expect_projection_paths_agree(q, 7);
}

TEST(RelativeQuotient, TrefoilOverS3) {
  auto g = trefoil_over_S3();
  for (int n : {1, 2, 3}) {
    auto q = relative_quotient(g, n);
    EXPECT_EQ(q.level(), n);
    expect_group_axioms(q, 2, 10 + n);
    expect_projection_paths_agree(q, 20 + n);
  }
}

TEST(RelativeQuotient, TruncationMatchesLowerLevel) {
  auto g = free2_over_cyclic(2);
  auto q3 = relative_quotient(g, 3);
  auto q2 = relative_quotient(g, 2);
  auto t = q3.truncate(2);
  EXPECT_EQ(t.hirsch_length(), q2.hirsch_length());
  std::mt19937 rng(8);
  for (int k = 0; k < 20; ++k) {
    FreeWord w = random_word(rng, 2, 10);
    EXPECT_EQ(t.project(w), q2.project(w));
    EXPECT_EQ(q3.truncate_element(q3.project(w), t), t.project(w));
  }
}

TEST(RelativeQuotient, PolycyclicGIsUnsupported) {
  auto G = std::make_shared<const AmbientGroup>(
      AmbientGroup::polycyclic(PcPresentation({"t"}, {0}, {1})));
  OverGStructure g(free_group(1), G, {{1}});
  EXPECT_THROW(relative_quotient(g, 2), UnsupportedError);
}

TEST(QuotientSubgroup, PreimagesAreWordsMappingBack) {
  auto q = relative_quotient(free2_over_cyclic(2), 3);
  std::vector<QuotientSubgroup<WordShadow>::Generator> gens;
  for (int i = 0; i < 2; ++i)
    gens.push_back({q.generator_images()[i], gen(i)});
  QuotientSubgroup<WordShadow> H(q, gens);
  EXPECT_TRUE(H.is_everything());
  std::mt19937 rng(9);
  for (int k = 0; k < 10; ++k) {
    auto a = q.project(random_word(rng, 2, 8));
    auto w = H.preimage(a);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(q.project(*w), a);
  }
}

TEST(QuotientSubgroup, ProperSubgroups) {
  auto q = relative_quotient(free2_over_cyclic(2), 2);
  QuotientSubgroup<> Hx2(q, {{q.project(gen(0, 2)), {}}});
  EXPECT_FALSE(Hx2.covers_G());
  EXPECT_FALSE(Hx2.contains(q.project(gen(0))));
  EXPECT_TRUE(Hx2.contains(q.project(gen(0, 6))));
  // x and y^2 reach all of G but miss y.
  QuotientSubgroup<> H(q, {{q.project(gen(0)), {}}, {q.project(gen(1, 2)), {}}});
  EXPECT_TRUE(H.covers_G());
  EXPECT_FALSE(H.is_everything());
  EXPECT_FALSE(H.contains(q.project(gen(1))));
  EXPECT_TRUE(H.contains(q.project(gen(0) * gen(1, 4) * gen(0, -3))));
}

TEST(IsomorphismOverG, HandBuiltHeisenberg) {
  auto QA = relative_quotient(over_trivial(free_group(2)), 3);
  auto QB = share(RelativeQuotient::from_polycyclic(heisenberg(), 3));
  const auto &pc = QB->nilpotent_part();
  QuotientHom f(free_group(2), QB, {QB->from_nil(pc.unit(0)), QB->from_nil(pc.unit(1))});
  IsoReport r = is_isomorphism_over_G(f, QA);
  EXPECT_TRUE(r.isomorphism()) << r.detail;
}

TEST(IsomorphismOverG, CentralProductIsNotHit) {
  // Z^2 x Z with the third factor in weight 2: same layers, not a quotient of F2 this way.
  PcPresentation p({"g1", "g2", "g3"}, {0, 0, 0}, {1, 1, 2});
  p.finalize();
  auto QA = relative_quotient(over_trivial(free_group(2)), 3);
  auto QB = share(RelativeQuotient::from_polycyclic(p, 3));
  QuotientHom f(free_group(2), QB, {QB->from_nil(p.unit(0)), QB->from_nil(p.unit(1))});
  IsoReport r = is_isomorphism_over_G(f, QA);
  EXPECT_TRUE(r.invariants_match);
  EXPECT_FALSE(r.surjective);
  EXPECT_FALSE(r.isomorphism());
}

TEST(IsomorphismOverG, DifferingInvariantIsNamed) {
  PcPresentation p({"g1", "g2"}, {0, 0}, {1, 1});
  p.finalize();
  auto QA = relative_quotient(over_trivial(free_group(2)), 3);
  auto QB = share(RelativeQuotient::from_polycyclic(p, 3));
  QuotientHom f(free_group(2), QB, {QB->from_nil(p.unit(0)), QB->from_nil(p.unit(1))});
  IsoReport r = is_isomorphism_over_G(f, QA);
  EXPECT_FALSE(r.isomorphism());
  EXPECT_EQ(r.differing_invariant, "hirsch_length");
}

TEST(IsomorphismOverG, AutomorphismsAndNonSurjections) {
  auto g = free2_over_cyclic(3);
  auto QA = relative_quotient(g, 3);
  auto QB = share(QA);
  // y -> y x^3 keeps gamma and is invertible.
  auto auto_map = word_map(QA, QB, {gen(0), gen(1) * gen(0, 3)});
  EXPECT_TRUE(is_isomorphism_over_G(auto_map, QA).isomorphism());
  // y -> y^4 keeps gamma (2 * 4 = 2 mod 3) but is not onto.
  auto squash = word_map(QA, QB, {gen(0), gen(1, 4)});
  IsoReport r = is_isomorphism_over_G(squash, QA);
  EXPECT_TRUE(r.over_G);
  EXPECT_FALSE(r.surjective);
  // x <-> y changes gamma.
  auto swap = word_map(QA, QB, {gen(1), gen(0)});
  EXPECT_FALSE(is_isomorphism_over_G(swap, QA).over_G);
}

TEST(IsomorphismOverG, DifferentGIsStructural) {
  auto QA = relative_quotient(free2_over_cyclic(2), 2);
  auto QB = share(relative_quotient(free2_over_cyclic(3), 2));
  QuotientHom f(free_group(2), QB, {QB->project(gen(0)), QB->project(gen(1))});
  EXPECT_THROW(is_isomorphism_over_G(f, QA), StructuralError);
}

TEST(IsomorphismOverG, TrefoilPresentationsAgreeOverS3) {
  // Identity on the three-coloured trefoil.
  auto g = trefoil_over_S3();
  auto QA = relative_quotient(g, 3);
  auto QB = share(QA);
  auto id = word_map(QA, QB, {gen(0), gen(1)});
  EXPECT_TRUE(is_isomorphism_over_G(id, QA).isomorphism());
}

TEST(IsomorphismOverG, TietzeTrefoilPresentations) {
  auto QA = relative_quotient(over_trivial(trefoil_torus()), 2);
  auto QB = share(relative_quotient(over_trivial(trefoil()), 2));
  // c = aba, d = ab
  auto f = word_map(QA, QB, {gen(0) * gen(1) * gen(0), gen(0) * gen(1)});
  EXPECT_TRUE(is_isomorphism_over_G(f, QA).isomorphism());
}

TEST(IsomorphismOverG, SquaringOnZIsNotOnto) {
  auto QA = relative_quotient(over_trivial(free_group(1)), 2);
  auto QB = share(QA);
  IsoReport r = is_isomorphism_over_G(word_map(QA, QB, {gen(0, 2)}), QA);
  EXPECT_TRUE(r.invariants_match);
  EXPECT_FALSE(r.surjective);
}
