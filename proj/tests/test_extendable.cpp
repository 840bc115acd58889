#include <gtest/gtest.h>

#include "knots.hpp"
#include "hinv/extendable.hpp"

using namespace hinv;
using namespace hinv::testing;

namespace {

bool contains_map(const SearchResult &r, const ExtendableMapCandidate &c) {
  return std::any_of(r.candidates.begin(), r.candidates.end(),
                     [&](const ExtendableMapCandidate &x) { return same_map(x, c); });
}

} // namespace

TEST(BoundaryCondition, RejectsNonPrimitiveMeridian) {
  EXPECT_THROW(BoundaryCondition(gen(0), gen(1), 2, 4), InputError);
  EXPECT_NO_THROW(BoundaryCondition(gen(0), gen(1), 2, 3));
  EXPECT_EQ(BoundaryCondition(gen(0), gen(1), 2, -1).mu_word(), gen(0, 2) * gen(1, -1));
}

TEST(KnotData, BasingConjugatesPeripheralWords) {
  KnotData k("t", over_trivial(trefoil()), BoundaryCondition(gen(0), trefoil_longitude()), gen(1));
  EXPECT_EQ(k.mu(), gen(1, -1) * gen(0) * gen(1));
  EXPECT_THROW(KnotData("t", over_trivial(trefoil()), BoundaryCondition(gen(2), FreeWord())),
               InputError);
}

TEST(KnotData, QuotientsAreShared) {
  auto k = trefoil_knot(trefoil_over_S3());
  EXPECT_EQ(k->quotient(2).get(), k->quotient(2).get());
}

TEST(CanonicalTau, PassesForEveryFixture) {
  for (int n : {2, 3})
    EXPECT_TRUE(canonical_tau(trefoil_knot(over_trivial(trefoil())), n).pass()) << n;
  EXPECT_TRUE(canonical_tau(trefoil_knot(trefoil_over_S3()), 2).pass());
  EXPECT_TRUE(canonical_tau(free2_knot(2), 2).pass());
  EXPECT_TRUE(canonical_tau(free2_knot(3), 3).pass());
}

TEST(CheckExtendable, SwapIsNotOverS3) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto Q = J->quotient(2);
  // a <-> b respects aba = bab but exchanges the colours.
  std::vector<RqElement> imgs{Q->generator_images()[1], Q->generator_images()[0]};
  auto c = make_candidate(J, J, 2, imgs);
  EXPECT_TRUE(c.tau.verified());
  EXPECT_EQ(c.report.over_g_condition, Verdict::fail);
  EXPECT_EQ(c.report.mu_condition, Verdict::fail);
  EXPECT_FALSE(c.pass());
}

TEST(CheckExtendable, NonHomomorphismIsTainted) {
  auto J = torsion_knot();
  auto Q = J->quotient(2);
  std::vector<RqElement> imgs{Q->generator_images()[0], Q->generator_images()[0]};
  auto c = make_candidate(J, J, 2, imgs);
  EXPECT_FALSE(c.tau.verified());
  EXPECT_FALSE(c.pass());
  EXPECT_FALSE(c.report.taints.empty());
}

TEST(CheckExtendable, PeripheralSubgroupMustBeHit) {
  // F(x,y) with meridian x and longitude y over the trivial group; y -> y^2
  // keeps the meridian but misses half of the peripheral subgroup.
  auto J = std::make_shared<const KnotData>("f2", over_trivial(free_group(2)),
                                            BoundaryCondition(gen(0), gen(1)));
  auto Q = J->quotient(2);
  auto y = Q->generator_images()[1];
  auto c = make_candidate(J, J, 2, {Q->generator_images()[0], Q->multiply(y, y)});
  EXPECT_EQ(c.report.mu_condition, Verdict::pass);
  EXPECT_EQ(c.report.peripheral_condition, Verdict::fail);
}

TEST(SearchExtendable, TrefoilOverTrivialGroupHasOneMap) {
  auto J = trefoil_knot(over_trivial(trefoil()));
  SearchResult r = search_extendable(J, J, 2, 2);
  EXPECT_EQ(r.verdict, Verdict::pass);
  ASSERT_EQ(r.candidates.size(), 1u);
  EXPECT_TRUE(same_map(r.candidates[0], canonical_tau(J, 2)));
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.examined, 25u);
}

TEST(SearchExtendable, FindsCanonicalMapOverS3) {
  auto J = trefoil_knot(trefoil_over_S3());
  SearchResult r = search_extendable(J, J, 2, 1);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_TRUE(contains_map(r, canonical_tau(J, 2)));
  for (const auto &c : r.candidates)
    EXPECT_TRUE(c.pass());
}

TEST(SearchExtendable, TorsionDirectionsAreEnumerated) {
  auto J = torsion_knot();
  SearchResult r = search_extendable(J, J, 2, 1);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.verdict, Verdict::pass);
  // y -> 1, y, y^2 all respect y^3 and fix x; the peripheral subgroup is <x>.
  EXPECT_EQ(r.candidates.size(), 3u);
}

TEST(SearchExtendable, LimitGivesUndecided) {
  auto J = free2_knot(2);
  SearchResult r = search_extendable(J, J, 2, 3, 100);
  EXPECT_EQ(r.verdict, Verdict::undecided);
  EXPECT_FALSE(r.note.empty());
  EXPECT_THROW(search_extendable(J, J, 2, -1), InputError);
}

TEST(SearchExtendable, DifferentGIsStructural) {
  EXPECT_THROW(search_extendable(free2_knot(2), free2_knot(3), 2, 1), StructuralError);
}

TEST(Tower, ProjectionOfCanonicalIsCanonical) {
  for (auto J : {trefoil_knot(trefoil_over_S3()), free2_knot(3)}) {
    auto c3 = canonical_tau(J, 3);
    auto c2 = tower_project(c3);
    EXPECT_TRUE(same_map(c2, canonical_tau(J, 2)));
    EXPECT_TRUE(c2.pass());
  }
}

TEST(Tower, InducedQuotientMapsAreIsomorphisms) {
  auto J = free2_knot(2);
  auto c = canonical_tau(J, 3);
  for (int j : {1, 2}) {
    QuotientIsoReport r = induced_quotient_iso(c, j);
    EXPECT_TRUE(r.pass()) << j << " " << r.iso.detail;
  }
  EXPECT_THROW(induced_quotient_iso(c, 3), InputError);
}

TEST(Tower, InducedMapFromNonSurjectionIsNotIso) {
  auto J = std::make_shared<const KnotData>("f2", over_trivial(free_group(2)),
                                            BoundaryCondition(gen(0), gen(1)));
  auto Q = J->quotient(3);
  auto y = Q->generator_images()[1];
  auto c = make_candidate(J, J, 3, {Q->generator_images()[0], Q->multiply(y, y)});
  QuotientIsoReport r = induced_quotient_iso(c, 2);
  EXPECT_FALSE(r.iso.isomorphism());
  EXPECT_FALSE(r.taints.empty());
}

TEST(Rebase, ByMeridianSquaredHasNoObstruction) {
  // a^2 lies over the identity of S3, so the rebased map stays over G.
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 2);
  RebaseResult r = rebase(*J, gen(0, 2), c);
  EXPECT_FALSE(r.obstruction);
  EXPECT_TRUE(r.candidate.pass());
}

TEST(Rebase, NonCentralizingElementIsReported) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 2);
  RebaseResult r = rebase(*J, gen(1), c);
  EXPECT_TRUE(r.obstruction);
  EXPECT_FALSE(r.candidate.pass());
  // Conjugating by the meridian itself moves b off its colour.
  EXPECT_EQ(rebase(*J, gen(0), c).candidate.report.over_g_condition, Verdict::fail);
  EXPECT_THROW(rebase(*J, gen(5), c), InputError);
}

TEST(BcAutomorphism, IdentityFromEqualPair) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 2);
  AutomorphismReport r = bc_automorphism_from_pair(c, c);
  EXPECT_TRUE(r.member()) << r.detail;
  EXPECT_TRUE(r.identity);
}

TEST(BcAutomorphism, ConjugationByMeridianSquaredIsMember) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 2);
  auto d = rebase(*J, gen(0, 2), c).candidate;
  AutomorphismReport r = bc_automorphism_from_pair(c, d);
  EXPECT_TRUE(r.member()) << r.detail;
  // Composing with itself stays in the group.
  QuotientHom p2 = compose_automorphisms(*r.p, *r.p);
  EXPECT_TRUE(check_automorphism(p2, *J).member());
}

TEST(BcAutomorphism, TorsionAutomorphism) {
  auto J = torsion_knot();
  auto Q = J->quotient(2);
  auto y = Q->generator_images()[1];
  auto c1 = canonical_tau(J, 2);
  auto c2 = make_candidate(J, J, 2, {Q->generator_images()[0], Q->multiply(y, y)});
  ASSERT_TRUE(c2.pass());
  AutomorphismReport r = bc_automorphism_from_pair(c1, c2);
  EXPECT_TRUE(r.member());
  EXPECT_FALSE(r.identity);
  // y -> 1 is not onto.
  auto c0 = make_candidate(J, J, 2, {Q->generator_images()[0], Q->identity()});
  EXPECT_FALSE(bc_automorphism_from_pair(c0, c1).member());
  EXPECT_FALSE(bc_automorphism_from_pair(c1, c0).member());
}

TEST(Pi1Shadow, AgreesWithItselfAndConjugates) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 2);
  EXPECT_EQ(pi1_shadow_compare(c, c).verdict, Verdict::pass);
  auto d = rebase(*J, gen(1), c).candidate;
  ShadowReport r = pi1_shadow_compare(c, d);
  EXPECT_EQ(r.verdict, Verdict::pass);
  ASSERT_TRUE(r.conjugator.has_value());
}

TEST(Pi1Shadow, DifferOnFiniteShadow) {
  auto J = torsion_knot();
  auto Q = J->quotient(2);
  auto y = Q->generator_images()[1];
  auto c1 = canonical_tau(J, 2);
  auto c2 = make_candidate(J, J, 2, {Q->generator_images()[0], Q->multiply(y, y)});
  ShadowReport r = pi1_shadow_compare(c1, c2);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(shadow_string(r.verdict), "differ");
}

TEST(Pi1Shadow, InfiniteShadowIsUndecided) {
  auto J = std::make_shared<const KnotData>("f2", over_trivial(free_group(2)),
                                            BoundaryCondition(gen(0), FreeWord()));
  auto Q = J->quotient(2);
  auto y = Q->generator_images()[1];
  auto c1 = canonical_tau(J, 2);
  auto c2 = make_candidate(J, J, 2, {Q->generator_images()[0], Q->multiply(y, y)});
  EXPECT_EQ(pi1_shadow_compare(c1, c2, 3).verdict, Verdict::undecided);
}

TEST(SearchExtendable, BoundZeroWithFreeDirectionsIsEmpty) {
  auto J = trefoil_knot(over_trivial(trefoil()));
  SearchResult r = search_extendable(J, J, 2, 0);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_EQ(r.verdict, Verdict::undecided);
}

TEST(Tower, ProjectingTwiceIsTheCompositeProjection) {
  auto J = free2_knot(2);
  auto c4 = canonical_tau(J, 4);
  auto twice = tower_project(tower_project(c4));
  auto direct = make_candidate(J, J, 2, truncate_images(c4, *J->quotient(2)));
  EXPECT_TRUE(same_map(twice, direct));
  EXPECT_TRUE(twice.pass());
}

TEST(Rebase, TrivialWordAndInverseUndo) {
  auto J = trefoil_knot(trefoil_over_S3());
  auto c = canonical_tau(J, 3);
  EXPECT_TRUE(same_map(rebase(*J, FreeWord(), c).candidate, c));
  FreeWord a = gen(1) * gen(0, 2);
  auto once = rebase(*J, a, c).candidate;
  EXPECT_FALSE(same_map(once, c));
  EXPECT_TRUE(same_map(rebase(*J, a.inverse(), once).candidate, c));
  // The meridian centralizes itself.
  EXPECT_EQ(rebase(*J, J->mu(), c).candidate.tau.apply(J->mu()), c.tau.apply(J->mu()));
}

TEST(KnotCondition, MeridianNormallyGeneratesKernel) {
  auto T = trefoil_knot(over_trivial(trefoil()));
  EXPECT_TRUE(meridian_normally_generates_kernel(*T, 3));
  EXPECT_TRUE(canonical_tau(T, 3).report.taints.empty());
  // the colouring sends the meridian off the identity of S3
  EXPECT_FALSE(meridian_normally_generates_kernel(*trefoil_knot(trefoil_over_S3()), 2));
  // F/<<[x,y]>> = Z^2
  auto F = std::make_shared<const KnotData>(
      "free2", over_trivial(free_group(2)),
      BoundaryCondition(commutator(gen(0, -1), gen(1, -1)), FreeWord()));
  EXPECT_FALSE(meridian_normally_generates_kernel(*F, 2));
}

TEST(KnotCondition, NonKnotSourceAdmitsNonIsomorphisms) {
  // x -> x, y -> 1 satisfies the three conditions for F(x,y) with meridian
  // [x,y] but is not onto; the report carries a taint saying so.
  auto J = std::make_shared<const KnotData>(
      "free2", over_trivial(free_group(2)),
      BoundaryCondition(commutator(gen(0, -1), gen(1, -1)), FreeWord()));
  auto Q = J->quotient(2);
  auto c = make_candidate(J, J, 2, {Q->project(gen(0)), Q->identity()});
  EXPECT_TRUE(c.pass());
  EXPECT_FALSE(c.report.taints.empty());
  EXPECT_FALSE(induced_quotient_iso(c, 1).iso.isomorphism());
}
