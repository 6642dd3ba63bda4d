#pragma once

#include "twalex/covers.hpp"
#include "twalex/errors.hpp"
#include "twalex/perm_rep.hpp"

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace twalex {

/// A homomorphism p from pi' to S_m factoring through pi_1 M_r, given by
/// the images of the generators of the branched cover presentation.
struct PeriodicRep {
  KnotGroup knot;
  std::size_t period = 1; // r
  CoverPresentation cover;
  PermRep images; // one permutation per cover generator

  std::size_t degree() const noexcept { return images.degree; }
};

/// Checks `images` against every relator of the branched cover presentation.
inline PeriodicRep make_periodic_rep(const KnotGroup &knot, std::size_t r, PermRep images) {
  PeriodicRep p;
  p.knot = knot;
  p.period = r;
  p.cover = branched_cover_presentation(knot, r);
  if (images.images.size() != p.cover.presentation.generator_count())
    throw NotPeriodic("expected " + std::to_string(p.cover.presentation.generator_count()) +
                      " generator images, got " + std::to_string(images.images.size()));
  for (const auto &img : images.images)
    if (img.degree() != images.degree) throw NotPeriodic("generator images of mixed degree");
  if (!satisfies_relators(p.cover.presentation, images))
    throw NotPeriodic("images do not satisfy the branched cover relators");
  p.images = std::move(images);
  return p;
}

/// p(w) for a base word with eps(w) = 0.
inline Permutation evaluate_kernel(const PeriodicRep &p, const Word &w) {
  if (p.knot.eps(w) != 0) throw Error("word is not in the commutator subgroup");
  return evaluate(p.images, p.cover.rewrite(w, p.cover.basepoint));
}

/// p(x0^-k x0^-e g x0^k) with e = eps(g): the k-th coordinate of the image of g
/// in the semidirect extension.
inline Permutation level_image(const PeriodicRep &p, std::size_t g, long k) {
  const Word &x = p.knot.meridian;
  const long e = p.knot.eps(g);
  const Word w = power(x, -k - e) * Word::generator(g) * power(x, k);
  return evaluate_kernel(p, w);
}

/// Smallest divisor d of r with p(x0^-d a x0^d) = p(a) on all of pi'.
inline std::size_t least_period(const PeriodicRep &p) {
  const std::size_t r = p.period;
  const std::size_t k = p.knot.generator_count();
  std::vector<std::vector<Permutation>> levels(k);
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t j = 0; j < r; ++j) levels[g].push_back(level_image(p, g, static_cast<long>(j)));
  for (std::size_t d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    bool ok = true;
    for (std::size_t g = 0; g < k && ok; ++g)
      for (std::size_t j = 0; j < r && ok; ++j) ok = levels[g][j] == levels[g][(j + d) % r];
    if (ok) return d;
  }
  return r;
}

/// p(pi'), the image of the branched cover group.
inline FiniteSubgroup periodic_image(const PeriodicRep &p, std::size_t cap = kDefaultSubgroupCap) {
  return image_group(p.images, cap);
}

/// Element xi^shift * alpha of <xi | xi^r0> semidirect Sigma^r0, where
/// alpha xi = xi theta(alpha) and theta(alpha)[k] = alpha[k + 1].
struct SemidirectElement {
  std::size_t shift = 0;
  std::vector<Permutation> coords;

  friend auto operator<=>(const SemidirectElement &, const SemidirectElement &) = default;
};

inline SemidirectElement semidirect_identity(std::size_t period, std::size_t degree) {
  return {0, std::vector<Permutation>(period, Permutation::identity(degree))};
}

inline std::vector<Permutation> shift_coords(const std::vector<Permutation> &a, std::size_t e) {
  const std::size_t n = a.size();
  std::vector<Permutation> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(a[(k + e) % n]);
  return out;
}

/// (i, a)(j, b) = (i + j, theta^j(a) b).
inline SemidirectElement operator*(const SemidirectElement &a, const SemidirectElement &b) {
  const std::size_t n = a.coords.size();
  SemidirectElement c;
  c.shift = (a.shift + b.shift) % n;
  c.coords = shift_coords(a.coords, b.shift);
  for (std::size_t k = 0; k < n; ++k) c.coords[k] = c.coords[k] * b.coords[k];
  return c;
}

/// Images of the base generators in the semidirect product.
struct SemidirectData {
  std::size_t period = 1;  // r0
  std::size_t degree = 1;  // m
  std::vector<SemidirectElement> generators;
};

struct SemidirectEmbedding {
  PermRep rep;                               // degree |P(pi')|
  std::vector<SemidirectElement> kernel;     // P(pi'), sorted; point i is kernel[i]
  std::size_t image_order = 0;               // order of the generated subgroup
};

/// Closure of the generator images, then the action of the image on its
/// shift-zero part H by h -> xi^-e h P(g), e the shift of P(g). On H this is
/// the right regular representation, so H acts transitively.
inline SemidirectEmbedding embed_semidirect(const SemidirectData &data,
                                            std::size_t cap = kDefaultSubgroupCap) {
  const auto id = semidirect_identity(data.period, data.degree);
  std::set<SemidirectElement> seen{id};
  std::deque<SemidirectElement> queue{id};
  while (!queue.empty()) {
    const SemidirectElement e = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : data.generators) {
      SemidirectElement h = e * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw CapExceeded("semidirect image has more than " + std::to_string(cap) + " elements");
        queue.push_back(std::move(h));
      }
    }
  }
  SemidirectEmbedding out;
  out.image_order = seen.size();
  for (const auto &e : seen)
    if (e.shift == 0) out.kernel.push_back(e);
  std::map<SemidirectElement, std::size_t> index;
  for (std::size_t i = 0; i < out.kernel.size(); ++i) index.emplace(out.kernel[i], i);

  out.rep.degree = out.kernel.size();
  for (const auto &g : data.generators) {
    std::vector<std::size_t> img(out.kernel.size());
    for (std::size_t i = 0; i < out.kernel.size(); ++i) {
      SemidirectElement h = out.kernel[i] * g;
      h.shift = 0;
      img[i] = index.at(h);
    }
    out.rep.images.emplace_back(std::move(img));
  }
  return out;
}

/// Result of extending a periodic representation to pi.
struct Extension {
  PermRep rep;                      // P on the knot generators
  std::size_t period = 1;           // r0
  std::size_t periodic_image_order = 0; // |p(pi')|
  std::size_t kernel_order = 0;     // |P(pi')| = degree of P
  std::size_t image_order = 0;      // |P(pi)|
};

/// Sends x0 to xi and u in pi' to (p(u), p(x0^-1 u x0), ...), r0 coordinates,
/// r0 the least period of p. Self-checks |P(pi')| >= |p(pi')|, that P has
/// least period r0, that P(pi') is transitive and that the embedding is
/// faithful on the semidirect image.
inline Extension extend_periodic(const PeriodicRep &p, std::size_t cap = kDefaultSubgroupCap) {
  Extension ext;
  ext.period = least_period(p);
  const std::size_t r0 = ext.period;
  SemidirectData data;
  data.period = r0;
  data.degree = p.degree();
  for (std::size_t g = 0; g < p.knot.generator_count(); ++g) {
    const long e = p.knot.eps(g);
    SemidirectElement el;
    el.shift = static_cast<std::size_t>(((e % static_cast<long>(r0)) + static_cast<long>(r0)) %
                                        static_cast<long>(r0));
    for (std::size_t k = 0; k < r0; ++k) el.coords.push_back(level_image(p, g, static_cast<long>(k)));
    data.generators.push_back(std::move(el));
  }
  SemidirectEmbedding emb = embed_semidirect(data, cap);
  ext.rep = std::move(emb.rep);
  ext.kernel_order = emb.kernel.size();
  ext.image_order = emb.image_order;
  ext.periodic_image_order = periodic_image(p, cap).order();

  validate(p.knot.presentation, ext.rep);
  if (ext.kernel_order < ext.periodic_image_order)
    throw Error("extension lost part of the periodic image");
  if (least_period(p.knot, ext.rep) != r0) throw Error("extension changed the least period");
  if (!is_transitive(epsilon_kernel_image(p.knot, ext.rep, cap), ext.rep.degree))
    throw Error("extension is not transitive on the commutator subgroup");
  if (image_group(ext.rep, cap).order() != ext.image_order)
    throw Error("extension is not faithful on the semidirect image");
  return ext;
}

} // namespace twalex
