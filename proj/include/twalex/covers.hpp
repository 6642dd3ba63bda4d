#pragma once

#include "twalex/abelianization.hpp"
#include "twalex/errors.hpp"
#include "twalex/perm_rep.hpp"
#include "twalex/presentation.hpp"
#include "twalex/smith.hpp"

#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace twalex {

/// Right action of the generators on cosets 0..degree-1.
struct CosetAction {
  std::size_t degree = 0;
  std::vector<Permutation> images;

  PermRep as_rep() const { return {degree, images}; }
};

inline void validate_action(const GroupPresentation &pres, const CosetAction &action) {
  if (!satisfies_relators(pres, action.as_rep()))
    throw ActionInvalid("coset action does not respect the relators");
}

/// One Schreier generator rep(c) g rep(c.g)^-1 for a non-tree edge.
struct SchreierGenerator {
  std::size_t base_generator = 0;
  std::size_t coset = 0;
  /// For cyclic actions eps mod r: the level j with the generator playing the
  /// role of x^-j g x^j. Equal to the coset otherwise.
  std::size_t level = 0;
  Word base_word;
};

inline constexpr std::size_t kTreeEdge = std::numeric_limits<std::size_t>::max();

/// Reidemeister-Schreier presentation of the stabilizer of a basepoint.
struct CoverPresentation {
  GroupPresentation presentation;
  std::vector<SchreierGenerator> generators;
  CosetAction action;
  std::size_t basepoint = 0;
  std::vector<std::size_t> cosets;           // orbit of the basepoint, ascending
  std::vector<std::optional<Word>> transversal; // indexed by coset; empty outside orbit
  std::vector<std::vector<std::size_t>> edge_generator; // [coset][g] or kTreeEdge
  bool restricted = false; // the action was not transitive
  std::size_t base_generator_count = 0;
  std::size_t base_relator_count = 0;
  std::size_t extra_relator_count = 0;

  std::size_t index() const noexcept { return cosets.size(); }

  /// Rewrites a base word read from coset `start` into Schreier generators.
  /// The coset reached at the end is stored in *end when given.
  Word rewrite(const Word &w, std::size_t start, std::size_t *end = nullptr) const {
    Word out;
    std::size_t c = start;
    for (const auto &letter : w)
      for (int rep = 0; rep < std::abs(letter.exponent); ++rep) {
      const Letter l{letter.generator, letter.exponent > 0 ? 1 : -1};
      if (l.exponent > 0) {
        const std::size_t gen = edge_generator.at(c).at(l.generator);
        if (gen != kTreeEdge) out.push_reduced({gen, 1});
        c = action.images[l.generator][c];
      } else {
        const std::size_t prev = inverse_images_.at(l.generator)[c];
        const std::size_t gen = edge_generator.at(prev).at(l.generator);
        if (gen != kTreeEdge) out.push_reduced({gen, -1});
        c = prev;
      }
      }
    if (end != nullptr) *end = c;
    return out;
  }

  /// gens - rels must equal index * (G - R) - (index - 1) - extras.
  bool euler_characteristic_holds() const {
    const long idx = static_cast<long>(index());
    const long expected = idx * (static_cast<long>(base_generator_count) -
                                 static_cast<long>(base_relator_count)) -
                          (idx - 1) - static_cast<long>(extra_relator_count);
    return static_cast<long>(presentation.generator_count()) -
               static_cast<long>(presentation.relator_count()) ==
           expected;
  }

  std::vector<Permutation> inverse_images_;
};

/// Reidemeister-Schreier rewriting for the stabilizer of `basepoint`. The
/// Schreier transversal is built breadth-first in generator order (g before
/// g^-1); tree-edge generators are eliminated immediately. When the action is
/// not transitive only the basepoint's orbit is used and `restricted` is set.
inline CoverPresentation reidemeister_schreier(const GroupPresentation &pres,
                                               const CosetAction &action,
                                               std::size_t basepoint = 0) {
  validate_action(pres, action);
  if (basepoint >= action.degree) throw Error("basepoint outside the coset set");
  const std::size_t k = pres.generator_count();
  const std::size_t n = action.degree;

  CoverPresentation cover;
  cover.action = action;
  cover.basepoint = basepoint;
  cover.base_generator_count = k;
  cover.base_relator_count = pres.relator_count();
  for (const auto &p : action.images) cover.inverse_images_.push_back(p.inverse());
  cover.transversal.assign(n, std::nullopt);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(k, false));

  std::deque<std::size_t> queue{basepoint};
  cover.transversal[basepoint] = Word{};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < k; ++g) {
      const std::size_t fwd = action.images[g][c];
      if (!cover.transversal[fwd]) {
        Word w = *cover.transversal[c];
        w.push_reduced({g, 1});
        cover.transversal[fwd] = w;
        tree[c][g] = true;
        queue.push_back(fwd);
      }
      const std::size_t bwd = cover.inverse_images_[g][c];
      if (!cover.transversal[bwd]) {
        Word w = *cover.transversal[c];
        w.push_reduced({g, -1});
        cover.transversal[bwd] = w;
        tree[bwd][g] = true;
        queue.push_back(bwd);
      }
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    if (cover.transversal[c]) cover.cosets.push_back(c);
  cover.restricted = cover.cosets.size() != n;

  std::vector<std::string> names;
  cover.edge_generator.assign(n, std::vector<std::size_t>(k, kTreeEdge));
  for (std::size_t c : cover.cosets)
    for (std::size_t g = 0; g < k; ++g) {
      if (tree[c][g]) continue;
      const std::size_t target = action.images[g][c];
      cover.edge_generator[c][g] = names.size();
      names.push_back("g" + std::to_string(g) + "_c" + std::to_string(c));
      Word w = *cover.transversal[c];
      w = w * Word::generator(g) * cover.transversal[target]->inverse();
      cover.generators.push_back({g, c, c, std::move(w)});
    }

  std::vector<Relator> relators;
  for (const auto &r : pres.relators()) {
    const Word w = r.word();
    for (std::size_t c : cover.cosets) relators.push_back({cover.rewrite(w, c), Word{}});
  }
  cover.presentation = GroupPresentation(std::move(names), std::move(relators));
  return cover;
}

/// The action eps mod r on r cosets.
inline CosetAction cyclic_action(const KnotGroup &knot, std::size_t r) {
  if (r == 0) throw Error("cyclic cover order must be at least 1");
  CosetAction action;
  action.degree = r;
  const long rr = static_cast<long>(r);
  for (std::size_t g = 0; g < knot.generator_count(); ++g) {
    std::vector<std::size_t> img(r);
    const long e = ((knot.eps(g) % rr) + rr) % rr;
    for (std::size_t c = 0; c < r; ++c)
      img[c] = static_cast<std::size_t>((static_cast<long>(c) + e) % rr);
    action.images.emplace_back(std::move(img));
  }
  return action;
}

namespace detail {
inline void assign_levels(CoverPresentation &cover, std::size_t r) {
  for (auto &g : cover.generators) g.level = (r - g.coset % r) % r;
}
} // namespace detail

/// Presentation of pi_1 of the r-fold cyclic cover X_r.
inline CoverPresentation cyclic_cover_presentation(const KnotGroup &knot, std::size_t r) {
  CoverPresentation cover = reidemeister_schreier(knot.presentation, cyclic_action(knot, r), 0);
  detail::assign_levels(cover, r);
  return cover;
}

/// Presentation of pi_1 of the r-fold branched cover M_r: the cyclic cover
/// presentation plus the rewritten lift of x0^r at every coset. All but the
/// basepoint lift are redundant; they are kept so the quotient is visibly
/// the right one.
inline CoverPresentation branched_cover_presentation(const KnotGroup &knot, std::size_t r) {
  CoverPresentation cover = cyclic_cover_presentation(knot, r);
  std::vector<Relator> relators = cover.presentation.relators();
  const Word xr = power(knot.meridian, static_cast<long>(r));
  for (std::size_t c : cover.cosets) {
    std::size_t end = 0;
    relators.push_back({cover.rewrite(xr, c, &end), Word{}});
    if (end != c) throw Error("meridian power does not close up in the cyclic cover");
  }
  cover.extra_relator_count = cover.cosets.size();
  cover.presentation = cover.presentation.with_relators(std::move(relators));
  return cover;
}

/// H_1 of the cover defined by `action`, from the basepoint's orbit.
inline AbelianGroup cover_homology(const GroupPresentation &pres, const CosetAction &action,
                                   std::size_t basepoint = 0) {
  return abelianization_group(reidemeister_schreier(pres, action, basepoint).presentation);
}

/// Product action g -> (P(g), eps(g) mod r) on N*r points, point (i, c) being
/// i*r + c.
inline CosetAction product_action(const KnotGroup &knot, const PermRep &rep, std::size_t r) {
  if (r == 0) throw Error("cover order must be at least 1");
  validate(knot.presentation, rep);
  const std::size_t n = rep.degree;
  const CosetAction cyc = cyclic_action(knot, r);
  CosetAction full;
  full.degree = n * r;
  for (std::size_t g = 0; g < knot.generator_count(); ++g) {
    std::vector<std::size_t> img(n * r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < r; ++c) img[i * r + c] = rep.images[g][i] * r + cyc.images[g][c];
    full.images.emplace_back(std::move(img));
  }
  return full;
}

/// The product action restricted to the orbit of (0, 0), renumbered in
/// ascending order. `r = nullopt` stands for the infinite cyclic cover,
/// which has no finite action.
inline CosetAction induced_cover_action(const KnotGroup &knot, const PermRep &rep,
                                        std::optional<std::size_t> r) {
  if (!r) throw InfiniteCover("the infinite cyclic cover has no finite coset action");
  const CosetAction prod = product_action(knot, rep, *r);
  const std::vector<Permutation> &full = prod.images;
  const std::size_t n = rep.degree, rr = *r;
  const std::vector<std::size_t> points = orbit(full, n * rr, 0);
  std::vector<std::size_t> renumber(n * rr, 0);
  for (std::size_t k = 0; k < points.size(); ++k) renumber[points[k]] = k;
  CosetAction action;
  action.degree = points.size();
  for (const auto &p : full) {
    std::vector<std::size_t> img(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) img[k] = renumber[p[points[k]]];
    action.images.emplace_back(std::move(img));
  }
  return action;
}

/// Homology of the induced cover X^_r, one entry per connected component
/// (product-action orbit, by least point), and H_1(X^_inf) / (t^r - 1).
/// Each component carries exactly one free summand mapping onto
/// ker(t^r - 1) on H_0(X^_inf) in the long exact sequence of
/// 0 -> C(X^_inf) -> C(X^_inf) -> C(X^_r) -> 0; dropping it leaves the
/// module quotient.
struct InducedCoverHomology {
  std::vector<AbelianGroup> components;
  AbelianGroup total;
  AbelianGroup module_quotient;
};

inline InducedCoverHomology induced_cover_homology(const KnotGroup &knot, const PermRep &rep,
                                                   std::size_t r) {
  const CosetAction prod = product_action(knot, rep, r);
  InducedCoverHomology out;
  for (const auto &o : orbits(prod.images, prod.degree)) {
    AbelianGroup h = cover_homology(knot.presentation, prod, o.front());
    out.components.push_back(h);
    out.total = direct_sum(out.total, h);
    if (h.rank == 0) throw Error("cover component without a free summand");
    --h.rank;
    out.module_quotient = direct_sum(out.module_quotient, h);
  }
  return out;
}

/// Action of the branched cover group on the N points of `rep`, obtained by
/// evaluating rep on the base word of each Schreier generator. Defines the
/// induced cover of M_r; throws ActionInvalid if rep does not factor.
inline CosetAction branched_induced_action(const CoverPresentation &branched,
                                           const PermRep &rep) {
  CosetAction action;
  action.degree = rep.degree;
  for (const auto &g : branched.generators) action.images.push_back(evaluate(rep, g.base_word));
  validate_action(branched.presentation, action);
  return action;
}

} // namespace twalex
