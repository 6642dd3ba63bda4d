#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace twalex;

namespace {

KnotGroup knot(const char *name) { return KnotGroup::from(builtin_presentation(name)); }

PermRep dihedral_rep() {
  return {3, {Permutation(std::vector<std::size_t>{1, 0, 2}),
              Permutation(std::vector<std::size_t>{1, 2, 0})}};
}

std::set<std::vector<Permutation>> search_set(const GroupPresentation &pres, std::size_t n) {
  std::set<std::vector<Permutation>> out;
  for (const auto &rep : search_homs(pres, n).reps) out.insert(rep.images);
  return out;
}

std::set<std::vector<Permutation>> brute_force_set(const GroupPresentation &pres, std::size_t n) {
  const auto sn = oracle::symmetric_group(n);
  std::set<std::vector<Permutation>> out;
  for (const auto &h : oracle::all_homs(pres, n)) out.insert(oracle::conjugation_minimum(h, sn));
  return out;
}

} // namespace

TEST(Permutation, CompositionAppliesLeftFactorFirst) {
  const Permutation p = Permutation::from_cycles("(0 1)", 3);
  const Permutation q = Permutation::from_cycles("(1 2)", 3);
  const Permutation pq = p * q;
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(pq[i], q[p[i]]);
  EXPECT_EQ(pq.cycles(), "(0 2 1)");
  EXPECT_EQ(pq.order(), 3u);
  EXPECT_TRUE((pq * pq.inverse()).is_identity());
  EXPECT_EQ(pq.pow(-1), pq.inverse());
  EXPECT_EQ(pq.pow(3), Permutation::identity(3));
  EXPECT_EQ(p.conjugated_by(q), q.inverse() * p * q);
}

TEST(Permutation, CycleNotation) {
  const Permutation p = Permutation::from_cycles("(0 3)(1 2 4)", 6);
  EXPECT_EQ(p.cycles(), "(0 3)(1 2 4)");
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(Permutation::identity(4).cycles(), "()");
  EXPECT_THROW(Permutation::from_cycles("(0 7)", 3), Error);
  EXPECT_THROW(Permutation::from_cycles("(0 1 0)", 3), Error);
}

TEST(Permutation, ImageSubgroups) {
  const Permutation c = Permutation::from_cycles("(0 1 2)", 3);
  const Permutation s = Permutation::from_cycles("(0 1)", 3);
  EXPECT_EQ(image_subgroup({c}, 3).order(), 3u);
  EXPECT_EQ(image_subgroup({c, s}, 3).order(), 6u);
  EXPECT_EQ(image_subgroup({}, 3).order(), 1u);
  EXPECT_TRUE(is_transitive(image_subgroup({c}, 3), 3));
  EXPECT_FALSE(is_transitive(image_subgroup({s}, 3), 3));
  EXPECT_THROW(image_subgroup({c, s}, 3, 4), CapExceeded);
  EXPECT_EQ(orbits({s}, 3), (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
}

TEST(PermRep, ValidateRejectsNonHomomorphisms) {
  const auto pres = builtin_presentation("trefoil");
  EXPECT_NO_THROW(validate(pres, dihedral_rep()));
  PermRep bad{3, {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1)", 3)}};
  EXPECT_THROW(validate(pres, bad), RepInvalid);
  EXPECT_THROW(validate(pres, PermRep{3, {Permutation::identity(3)}}), RepInvalid);
}

TEST(SearchHoms, SmallCases) {
  const auto trefoil = builtin_presentation("trefoil");
  const auto one = search_homs(trefoil, 1);
  ASSERT_EQ(one.reps.size(), 1u);
  EXPECT_TRUE(one.reps[0].is_trivial());

  const auto three = search_homs(trefoil, 3);
  const auto sn = oracle::symmetric_group(3);
  const auto dihedral = oracle::conjugation_minimum(dihedral_rep().images, sn);
  bool found_dihedral = false, found_d3 = false;
  for (const auto &rep : three.reps) {
    found_dihedral |= rep.images == dihedral;
    found_d3 |= image_group(rep).order() == 6;
  }
  EXPECT_TRUE(found_dihedral);
  EXPECT_TRUE(found_d3);

  EXPECT_EQ(search_homs(builtin_presentation("unknot"), 2).reps.size(), 2u);
  EXPECT_EQ(search_homs(builtin_presentation("unknot"), 4).reps.size(), 5u);
}

TEST(SearchHoms, MatchesBruteForceUpToConjugacy) {
  struct Case {
    const char *knot;
    std::size_t max_degree;
  };
  for (const Case c : {Case{"trefoil", 5}, Case{"figure8", 5}, Case{"trefoil-wirtinger", 4},
                       Case{"figure8-wirtinger", 3}, Case{"unknot", 5}}) {
    const auto pres = builtin_presentation(c.knot);
    for (std::size_t n = 1; n <= c.max_degree; ++n)
      EXPECT_EQ(search_set(pres, n), brute_force_set(pres, n)) << c.knot << " degree " << n;
  }
}

TEST(SearchHoms, ClassesAreDistinct) {
  // No two results are simultaneously conjugate.
  const auto sn = oracle::symmetric_group(5);
  const auto res = search_homs(builtin_presentation("figure8"), 5);
  std::set<std::vector<Permutation>> minima;
  for (const auto &rep : res.reps) {
    EXPECT_EQ(oracle::conjugation_minimum(rep.images, sn), rep.images);
    minima.insert(rep.images);
  }
  EXPECT_EQ(minima.size(), res.reps.size());
}

TEST(SearchHoms, BudgetTruncationIsDeterministic) {
  const auto pres = builtin_presentation("figure8");
  const SearchResult full = search_homs(pres, 5);
  ASSERT_GT(full.nodes, 10u);
  for (std::uint64_t budget : {std::uint64_t{5}, full.nodes / 3, full.nodes / 2}) {
    std::vector<SearchResult> partials;
    for (unsigned threads : {1u, 2u, 3u}) {
      try {
        search_homs(pres, 5, {budget, threads});
        FAIL() << "budget " << budget << " should truncate";
      } catch (const BudgetExhausted &e) {
        EXPECT_TRUE(e.partial().truncated);
        partials.push_back(e.partial());
      }
    }
    for (const auto &p : partials) {
      EXPECT_EQ(p.reps, partials[0].reps);
      EXPECT_EQ(p.nodes, partials[0].nodes);
      for (const auto &rep : p.reps)
        EXPECT_TRUE(std::binary_search(full.reps.begin(), full.reps.end(), rep));
    }
  }
}

TEST(SearchHoms, ThreadsGiveIdenticalResults) {
  for (const char *name : {"trefoil", "figure8", "trefoil-wirtinger"}) {
    const auto pres = builtin_presentation(name);
    const SearchResult one = search_homs(pres, 5, {SearchOptions{}.node_budget, 1});
    const SearchResult many = search_homs(pres, 5, {SearchOptions{}.node_budget, 4});
    EXPECT_EQ(one.reps, many.reps) << name;
    EXPECT_EQ(one.nodes, many.nodes) << name;
  }
}

TEST(PermRep, EpsilonKernelImage) {
  const KnotGroup k = knot("trefoil");
  const FiniteSubgroup kernel = epsilon_kernel_image(k, dihedral_rep());
  EXPECT_EQ(kernel.order(), 3u);
  const auto by_words = oracle::kernel_images_by_words(k, dihedral_rep(), 8);
  EXPECT_EQ(std::vector<Permutation>(by_words.begin(), by_words.end()), kernel.elements);

  for (const char *name : {"trefoil", "figure8"}) {
    const KnotGroup kk = knot(name);
    for (const auto &rep : search_homs(kk.presentation, 4).reps) {
      const auto words = oracle::kernel_images_by_words(kk, rep, 6);
      const FiniteSubgroup sub = epsilon_kernel_image(kk, rep);
      for (const auto &p : words) EXPECT_TRUE(sub.contains(p)) << name;
    }
  }
}

TEST(PermRep, LeastPeriodOnKnotGroup) {
  const KnotGroup k = knot("trefoil");
  EXPECT_EQ(least_period(k, PermRep::trivial(2, 3)), 1u);
  EXPECT_EQ(least_period(k, dihedral_rep()), 2u);
  // Factors through the abelianization: pi' has trivial image.
  const PermRep abelian{3, {Permutation::from_cycles("(0 1 2)", 3), Permutation::identity(3)}};
  ASSERT_TRUE(satisfies_relators(k.presentation, abelian));
  EXPECT_EQ(least_period(k, abelian), 1u);
}

TEST(Periodic, TrefoilQuotientExtendsToDegreeThree) {
  const KnotGroup k = knot("trefoil");
  const CoverPresentation cover = branched_cover_presentation(k, 2);
  const SearchResult quotients = search_homs(cover.presentation, 3);
  std::size_t nontrivial = 0;
  for (const auto &q : quotients.reps) {
    if (q.is_trivial()) continue;
    ++nontrivial;
    const PeriodicRep p = make_periodic_rep(k, 2, q);
    EXPECT_EQ(periodic_image(p).order(), 3u);
    EXPECT_EQ(least_period(p), 2u);
    const Extension ext = extend_periodic(p);
    EXPECT_EQ(ext.rep.degree, 3u);
    EXPECT_EQ(ext.period, 2u);
    EXPECT_EQ(ext.image_order, 6u);
    EXPECT_EQ(least_period(k, ext.rep), 2u);
    EXPECT_EQ(image_group(ext.rep).order(), 6u);
  }
  EXPECT_EQ(nontrivial, 1u);
}

TEST(Periodic, TrivialQuotientExtendsTrivially) {
  const KnotGroup k = knot("figure8");
  const CoverPresentation cover = branched_cover_presentation(k, 3);
  const PeriodicRep p =
      make_periodic_rep(k, 3, PermRep::trivial(cover.presentation.generator_count(), 4));
  EXPECT_EQ(least_period(p), 1u);
  const Extension ext = extend_periodic(p);
  EXPECT_EQ(ext.rep.degree, 1u);
  EXPECT_EQ(ext.period, 1u);
  EXPECT_TRUE(ext.rep.is_trivial());
}

TEST(Periodic, RejectsNonPeriodicImages) {
  const KnotGroup k = knot("trefoil");
  const CoverPresentation cover = branched_cover_presentation(k, 2);
  PermRep wrong = PermRep::trivial(cover.presentation.generator_count(), 3);
  wrong.images[0] = Permutation::from_cycles("(0 1)", 3);
  EXPECT_THROW(make_periodic_rep(k, 2, wrong), NotPeriodic);
  EXPECT_THROW(make_periodic_rep(k, 2, PermRep::trivial(1, 3)), NotPeriodic);
}

TEST(Periodic, SemidirectClosureMatchesBitOracle) {
  // r0 = 2 and m = 2: elements of <xi> x| (S_2)^2 encoded as three bits.
  // As for a knot group, xi itself (the meridian's image) is a generator.
  const Permutation id = Permutation::identity(2), sw = Permutation::from_cycles("(0 1)", 2);
  auto decode = [&](int e) {
    return SemidirectElement{static_cast<std::size_t>(e & 1),
                             {(e >> 1) & 1 ? sw : id, (e >> 2) & 1 ? sw : id}};
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int count = static_cast<int>(oracle::uniform(1, 3));
    std::vector<int> bits{1};
    SemidirectData data;
    data.period = 2;
    data.degree = 2;
    data.generators.push_back(decode(1));
    for (int i = 0; i < count; ++i) {
      bits.push_back(static_cast<int>(oracle::uniform(0, 7)));
      data.generators.push_back(decode(bits.back()));
    }
    const std::set<int> closure = oracle::z2_semidirect_closure(bits);
    const SemidirectEmbedding emb = embed_semidirect(data);
    ASSERT_EQ(emb.image_order, closure.size());
    std::size_t shift_zero = 0;
    for (int e : closure) shift_zero += (e & 1) == 0;
    ASSERT_EQ(emb.kernel.size(), shift_zero);
    ASSERT_EQ(emb.rep.degree, shift_zero);
    // Only xi^2 = 1 can act trivially, and xi does exactly when it
    // centralizes H, i.e. every shift-zero element has equal coordinates.
    bool centralizes = true;
    for (int e : closure)
      if ((e & 1) == 0 && ((e >> 1) & 1) != ((e >> 2) & 1)) centralizes = false;
    ASSERT_EQ(image_group(emb.rep).order(), centralizes ? closure.size() / 2 : closure.size());
  }
}

TEST(Periodic, ExtensionPropertiesOnAllQuotients) {
  // |P(pi')| >= |p(pi')|, the least period survives, and period 1 forces a
  // trivial quotient.
  for (const char *name : {"trefoil", "figure8"}) {
    const KnotGroup k = knot(name);
    for (std::size_t r : {2u, 3u}) {
      const CoverPresentation cover = branched_cover_presentation(k, r);
      for (std::size_t m = 1; m <= 5; ++m) {
        for (const auto &q : search_homs(cover.presentation, m).reps) {
          const PeriodicRep p = make_periodic_rep(k, r, q);
          const std::size_t r0 = least_period(p);
          EXPECT_EQ(r % r0, 0u);
          if (r0 == 1) {
            EXPECT_TRUE(q.is_trivial()) << name << " r=" << r << " m=" << m;
            continue;
          }
          EXPECT_FALSE(q.is_trivial());
          const Extension ext = extend_periodic(p);
          EXPECT_GE(ext.kernel_order, ext.periodic_image_order);
          EXPECT_EQ(least_period(k, ext.rep), r0);
          EXPECT_EQ(ext.image_order, ext.kernel_order * r0);
          EXPECT_TRUE(is_transitive(epsilon_kernel_image(k, ext.rep), ext.rep.degree));
        }
      }
    }
  }
}
