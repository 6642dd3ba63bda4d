#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace twalex;

namespace {

KnotGroup knot(const char *name) { return KnotGroup::from(builtin_presentation(name)); }

PermRep dihedral_rep() {
  return {3, {Permutation(std::vector<std::size_t>{1, 0, 2}),
              Permutation(std::vector<std::size_t>{1, 2, 0})}};
}

Word substitute_base_words(const CoverPresentation &cover, const Word &w) {
  Word out;
  for (const auto &l : w) {
    const Word &b = cover.generators.at(l.generator).base_word;
    for (int i = 0; i < std::abs(l.exponent); ++i) out = out * (l.exponent > 0 ? b : b.inverse());
  }
  return free_reduce(out);
}

} // namespace

TEST(ReidemeisterSchreier, CountsAndEulerCharacteristic) {
  for (const char *name : {"trefoil", "figure8", "trefoil-wirtinger", "figure8-wirtinger"}) {
    const KnotGroup k = knot(name);
    const std::size_t gens = k.generator_count(), rels = k.presentation.relator_count();
    for (std::size_t r = 1; r <= 5; ++r) {
      const CoverPresentation cyc = cyclic_cover_presentation(k, r);
      EXPECT_EQ(cyc.index(), r);
      EXPECT_FALSE(cyc.restricted);
      EXPECT_EQ(cyc.presentation.generator_count(), r * gens - (r - 1)) << name << " r=" << r;
      EXPECT_EQ(cyc.presentation.relator_count(), r * rels);
      EXPECT_TRUE(cyc.euler_characteristic_holds());
      const CoverPresentation br = branched_cover_presentation(k, r);
      EXPECT_EQ(br.presentation.relator_count(), r * rels + r);
      EXPECT_EQ(br.extra_relator_count, r);
      EXPECT_TRUE(br.euler_characteristic_holds());
      for (const auto &g : cyc.generators) EXPECT_EQ(g.level, (r - g.coset) % r);
    }
  }
}

TEST(ReidemeisterSchreier, TrivialActionReproducesPresentation) {
  for (const auto &name : builtin_knot_names()) {
    const auto pres = builtin_presentation(name);
    CosetAction trivial{1, std::vector<Permutation>(pres.generator_count(), Permutation::identity(1))};
    const CoverPresentation cover = reidemeister_schreier(pres, trivial, 0);
    ASSERT_EQ(cover.presentation.generator_count(), pres.generator_count());
    ASSERT_EQ(cover.presentation.relator_count(), pres.relator_count());
    for (std::size_t i = 0; i < pres.relator_count(); ++i)
      EXPECT_EQ(cover.presentation.relator(i).word(), free_reduce(pres.relator(i).word())) << name;
  }
}

TEST(ReidemeisterSchreier, FreeCyclicGroup) {
  // Index-3 subgroup of Z is Z.
  const auto pres = parse_presentation("gens: x\n");
  const CosetAction three{3, {Permutation::from_cycles("(0 1 2)", 3)}};
  const CoverPresentation cover = reidemeister_schreier(pres, three, 0);
  EXPECT_EQ(cover.presentation.generator_count(), 1u);
  EXPECT_EQ(cover.presentation.relator_count(), 0u);
  EXPECT_EQ(free_reduce(cover.generators[0].base_word), free_reduce(power(Word::generator(0), 3)));
  const AbelianGroup h = abelianization_group(cover.presentation);
  EXPECT_EQ(h.rank, 1u);
  EXPECT_TRUE(h.torsion.empty());
}

TEST(ReidemeisterSchreier, RewriteRecoversWord) {
  // Substituting base words back yields t(start) w t(end)^-1.
  for (const char *name : {"trefoil", "figure8-wirtinger"}) {
    const KnotGroup k = knot(name);
    const CoverPresentation cover = reidemeister_schreier(
        k.presentation, induced_cover_action(k, search_homs(k.presentation, 3).reps.back(), 2), 0);
    for (int trial = 0; trial < 300; ++trial) {
      const Word w = oracle::random_word(k.generator_count(), 12);
      const std::size_t start = cover.cosets[static_cast<std::size_t>(
          oracle::uniform(0, static_cast<long>(cover.index()) - 1))];
      std::size_t end = 0;
      const Word rewritten = cover.rewrite(w, start, &end);
      const Word expected =
          free_reduce(*cover.transversal[start] * w * cover.transversal[end]->inverse());
      ASSERT_EQ(substitute_base_words(cover, rewritten), expected) << name;
    }
  }
}

TEST(ReidemeisterSchreier, RejectsInvalidActions) {
  const auto pres = builtin_presentation("trefoil");
  const CosetAction bad{3, {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1)", 3)}};
  EXPECT_THROW(validate_action(pres, bad), ActionInvalid);
  EXPECT_THROW(reidemeister_schreier(pres, bad, 0), ActionInvalid);
}

TEST(ReidemeisterSchreier, NonTransitiveActionIsRestricted) {
  const auto pres = builtin_presentation("trefoil");
  const CosetAction split{4, {Permutation::from_cycles("(0 1)", 4), Permutation::identity(4)}};
  ASSERT_TRUE(satisfies_relators(pres, split.as_rep()));
  const CoverPresentation cover = reidemeister_schreier(pres, split, 2);
  EXPECT_TRUE(cover.restricted);
  EXPECT_EQ(cover.index(), 1u);
}

TEST(BranchedCovers, HomologyOfDoubleCovers) {
  EXPECT_EQ(to_string(abelianization_group(branched_cover_presentation(knot("trefoil"), 2).presentation)),
            "Z/3");
  EXPECT_EQ(to_string(abelianization_group(branched_cover_presentation(knot("figure8"), 2).presentation)),
            "Z/5");
  EXPECT_EQ(to_string(abelianization_group(branched_cover_presentation(knot("figure8"), 3).presentation)),
            "Z/4 + Z/4");
  EXPECT_EQ(to_string(abelianization_group(branched_cover_presentation(knot("trefoil"), 1).presentation)),
            "0");
}

TEST(BranchedCovers, OrdersMatchCyclicResultants) {
  for (const char *name : {"trefoil", "figure8", "trefoil-wirtinger", "figure8-wirtinger", "unknot"}) {
    const KnotGroup k = knot(name);
    const LaurentPoly alex = alexander_polynomial(k);
    for (std::size_t r = 1; r <= 6; ++r) {
      const AbelianGroup m = abelianization_group(branched_cover_presentation(k, r).presentation);
      EXPECT_EQ(m.order(), abs(cyclic_resultant(alex, r))) << name << " r=" << r;
      // The unbranched cover adds exactly one free summand.
      const AbelianGroup x = abelianization_group(cyclic_cover_presentation(k, r).presentation);
      EXPECT_EQ(x.rank, m.rank + 1) << name << " r=" << r;
      EXPECT_EQ(x.torsion, m.torsion) << name << " r=" << r;
    }
  }
}

TEST(InducedCovers, ProductActionSizes) {
  const KnotGroup k = knot("trefoil");
  EXPECT_EQ(product_action(k, dihedral_rep(), 2).degree, 6u);
  EXPECT_EQ(induced_cover_action(k, dihedral_rep(), 2).degree, 6u);
  EXPECT_EQ(induced_cover_action(k, dihedral_rep(), 1).degree, 3u);
  EXPECT_EQ(induced_cover_action(k, PermRep::trivial(2), 4).degree, 4u);
  EXPECT_THROW(induced_cover_action(k, dihedral_rep(), std::nullopt), InfiniteCover);
  // A non-transitive product action keeps only the orbit of (0, 0).
  const PermRep abelian{3, {Permutation::from_cycles("(0 1 2)", 3), Permutation::identity(3)}};
  EXPECT_EQ(induced_cover_action(k, abelian, 3).degree, 3u);
}

TEST(InducedCovers, TrefoilDihedralRepresentation) {
  const InducedCoverHomology h = induced_cover_homology(knot("trefoil"), dihedral_rep(), 2);
  ASSERT_EQ(h.components.size(), 1u);
  EXPECT_EQ(to_string(h.total), "Z^3");
  EXPECT_EQ(to_string(h.module_quotient), "Z^2");
}

TEST(InducedCovers, TrivialRepresentationGivesCyclicCovers) {
  const KnotGroup k = knot("trefoil");
  const char *expected[] = {"0", "Z/3", "Z/2 + Z/2"};
  for (std::size_t r = 1; r <= 3; ++r) {
    const InducedCoverHomology h = induced_cover_homology(k, PermRep::trivial(2), r);
    EXPECT_EQ(to_string(h.module_quotient), expected[r - 1]);
    EXPECT_EQ(h.total.rank, 1u);
  }
}

TEST(InducedCovers, BranchedInducedAction) {
  const KnotGroup k = knot("trefoil");
  const CoverPresentation br = branched_cover_presentation(k, 2);
  const CosetAction a = branched_induced_action(br, dihedral_rep());
  EXPECT_EQ(a.degree, 3u);
  // The Z/3 quotient of pi_1 M_2 acts by 3-cycles.
  EXPECT_EQ(image_group(a.as_rep()).order(), 3u);
  // x0^2 must act trivially.
  const PermRep abelian{3, {Permutation::from_cycles("(0 1 2)", 3), Permutation::identity(3)}};
  EXPECT_THROW(branched_induced_action(br, abelian), ActionInvalid);
}
