#pragma once

#include "twalex/errors.hpp"
#include "twalex/presentation.hpp"
#include "twalex/smith.hpp"

#include <numeric>
#include <tuple>
#include <vector>

namespace twalex {

/// The epimorphism eps: pi -> Z = <t>, stored as its value on each generator.
struct AbelianizationMap {
  std::vector<long> exponents;

  long operator()(const Word &w) const {
    long s = 0;
    for (const auto &l : w) s += l.exponent * exponents.at(l.generator);
    return s;
  }
  long operator()(std::size_t g) const { return exponents.at(g); }

  friend bool operator==(const AbelianizationMap &, const AbelianizationMap &) = default;
};

/// Relator-by-generator exponent sum matrix.
inline IntMatrix exponent_sum_matrix(const GroupPresentation &pres) {
  IntMatrix m(pres.relator_count(), pres.generator_count());
  for (std::size_t i = 0; i < pres.relator_count(); ++i)
    for (const auto &l : pres.relator(i).word()) m(i, l.generator) += l.exponent;
  return m;
}

/// Abelianization of a presentation as an abstract group.
inline AbelianGroup abelianization_group(const GroupPresentation &pres) {
  return cokernel_invariants(exponent_sum_matrix(pres));
}

/// Computes eps and verifies H_1 = Z. The sign is fixed by eps(meridian) = 1
/// when a meridian is designated, otherwise by making the first nonzero value
/// positive.
inline AbelianizationMap abelianization_map(const GroupPresentation &pres) {
  if (pres.generator_count() == 0) throw NotInfiniteCyclic("no generators");
  const IntMatrix m = exponent_sum_matrix(pres);
  const auto snf = smith_normal_form(m, true);
  const std::size_t nonzero = snf.diagonal.size();
  const std::size_t rank = pres.generator_count() - nonzero;
  bool torsion = false;
  for (const auto &d : snf.diagonal)
    if (d != 1) torsion = true;
  if (rank != 1 || torsion)
    throw NotInfiniteCyclic("abelianization is " + to_string(abelianization_group(pres)) +
                            ", not Z");
  // Column `nonzero` of the right transform spans the free quotient: the map
  // v -> (v * right)[nonzero] kills the row space and is onto Z.
  AbelianizationMap eps;
  for (std::size_t g = 0; g < pres.generator_count(); ++g)
    eps.exponents.push_back(static_cast<long>((*snf.right)(g, nonzero)));
  int sign = 1;
  if (auto mer = pres.meridian()) {
    const long v = eps.exponents[*mer];
    if (v != 1 && v != -1)
      throw Error("designated meridian `" + pres.name(*mer) +
                  "` does not map to a generator of H_1");
    sign = v > 0 ? 1 : -1;
  } else {
    for (long v : eps.exponents)
      if (v != 0) {
        sign = v > 0 ? 1 : -1;
        break;
      }
  }
  for (auto &v : eps.exponents) v *= sign;
  return eps;
}

/// A knot-group presentation together with eps and a fixed word x0 with
/// eps(x0) = 1 (the meridian when one is designated).
struct KnotGroup {
  GroupPresentation presentation;
  AbelianizationMap eps;
  Word meridian;

  static KnotGroup from(GroupPresentation pres) {
    KnotGroup k;
    k.eps = abelianization_map(pres);
    k.meridian = choose_meridian(pres, k.eps);
    k.presentation = std::move(pres);
    return k;
  }

  std::size_t generator_count() const { return presentation.generator_count(); }

private:
  static Word choose_meridian(const GroupPresentation &pres, const AbelianizationMap &eps) {
    if (auto m = pres.meridian()) return Word::generator(*m);
    for (std::size_t g = 0; g < eps.exponents.size(); ++g) {
      if (eps.exponents[g] == 1) return Word::generator(g);
      if (eps.exponents[g] == -1) return Word::generator(g, -1);
    }
    // Bezout combination of the generator values.
    Word w;
    long value = 0;
    for (std::size_t g = 0; g < eps.exponents.size(); ++g) {
      const long e = eps.exponents[g];
      if (e == 0) continue;
      if (w.empty()) {
        w = Word::generator(g);
        value = e;
        continue;
      }
      // Extended gcd of (value, e).
      long old_r = value, r = e, old_s = 1, s = 0, old_u = 0, u = 1;
      while (r != 0) {
        const long q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
        std::tie(old_u, u) = std::pair{u, old_u - q * u};
      }
      w = power(w, old_s) * power(Word::generator(g), old_u);
      value = old_r;
    }
    if (value < 0) w = w.inverse();
    return w;
  }
};

} // namespace twalex
