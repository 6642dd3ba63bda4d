#pragma once

#include "twalex/abelianization.hpp"
#include "twalex/errors.hpp"
#include "twalex/fox.hpp"
#include "twalex/laurent_matrix.hpp"
#include "twalex/perm_rep.hpp"
#include "twalex/smith.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace twalex {

/// Permutation matrix with M[i][p(i)] = 1, so M(p) M(q) = M(p * q).
inline LaurentMatrix permutation_matrix(const Permutation &p, long t_exponent = 0) {
  LaurentMatrix m(p.degree(), p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) m(i, p[i]) = LaurentPoly::t(t_exponent);
  return m;
}

/// (rho x eps)(w) = M(P(w)) t^eps(w). Words act on row vectors from the right.
inline LaurentMatrix twisted_matrix(const PermRep &rep, const AbelianizationMap &eps,
                                    const Word &w) {
  return permutation_matrix(evaluate(rep, w), eps(w));
}

/// Linear extension of rho x eps to the group ring.
inline LaurentMatrix twisted_matrix(const PermRep &rep, const AbelianizationMap &eps,
                                    const GroupRingElement &x) {
  LaurentMatrix m(rep.degree, rep.degree);
  for (const auto &[w, c] : x.terms()) {
    const Permutation p = evaluate(rep, w);
    const long e = eps(w);
    for (std::size_t i = 0; i < rep.degree; ++i) m(i, p[i]) += LaurentPoly::monomial(c, e);
  }
  return m;
}

struct TwistedJacobian {
  LaurentMatrix d2; // (R N) x (G N)
  LaurentMatrix d1; // (G N) x N
};

namespace detail {
// Adds sign * Phi(d word / d g) into the row block of d2, scanning the word
// once with a running prefix image.
inline void add_fox_row(LaurentMatrix &d2, std::size_t row0, const PermRep &rep,
                        const AbelianizationMap &eps, const Word &w, int sign) {
  const std::size_t n = rep.degree;
  Permutation prefix = Permutation::identity(n);
  long e = 0;
  for (const auto &l : w) {
    const Permutation &g = rep.images[l.generator];
    const std::size_t col0 = l.generator * n;
    if (l.exponent > 0) {
      for (std::size_t i = 0; i < n; ++i)
        d2(row0 + i, col0 + prefix[i]) += LaurentPoly::monomial(sign, e);
      prefix = prefix * g;
      e += eps.exponents[l.generator];
    } else {
      prefix = prefix * g.inverse();
      e -= eps.exponents[l.generator];
      for (std::size_t i = 0; i < n; ++i)
        d2(row0 + i, col0 + prefix[i]) += LaurentPoly::monomial(-sign, e);
    }
  }
}
} // namespace detail

/// Twisted chain matrices: block (k, g) of d2 is Phi(d lhs_k / dg) -
/// Phi(d rhs_k / dg); block g of d1 is Phi(g) - I.
inline TwistedJacobian twisted_jacobian(const GroupPresentation &pres, const PermRep &rep,
                                        const AbelianizationMap &eps) {
  validate(pres, rep);
  const std::size_t n = rep.degree, k = pres.generator_count();
  TwistedJacobian j;
  j.d2 = LaurentMatrix(pres.relator_count() * n, k * n);
  for (std::size_t r = 0; r < pres.relator_count(); ++r) {
    detail::add_fox_row(j.d2, r * n, rep, eps, pres.relator(r).lhs, 1);
    detail::add_fox_row(j.d2, r * n, rep, eps, pres.relator(r).rhs, -1);
  }
  j.d1 = LaurentMatrix(k * n, n);
  for (std::size_t g = 0; g < k; ++g)
    j.d1.set_block(g * n, 0,
                   permutation_matrix(rep.images[g], eps.exponents[g]) - LaurentMatrix::identity(n));
  return j;
}

/// Default cap on the number of minors enumerated for a gcd.
inline constexpr std::size_t kDefaultMinorCap = 5000;

namespace detail {
inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer b = 1;
  for (std::size_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Calls f on each k-subset of {0..n-1} in lexicographic order until f
// returns false.
template <class F> void for_each_subset(std::size_t n, std::size_t k, F &&f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}
} // namespace detail

/// gcd of all maximal minors; the determinant when square, 0 when there are
/// fewer rows than columns. Throws CapExceeded past `cap` minors.
inline LaurentPoly gcd_maximal_minors(const LaurentMatrix &m, std::size_t cap = kDefaultMinorCap) {
  if (m.cols() == 0) return 1;
  if (m.rows() < m.cols()) return 0;
  if (m.rows() == m.cols()) return unit_normalized(det_laurent(m));
  if (detail::binomial(m.rows(), m.cols()) > cap)
    throw CapExceeded("too many maximal minors (" +
                      to_string(detail::binomial(m.rows(), m.cols())) + ")");
  LaurentPoly acc;
  detail::for_each_subset(m.rows(), m.cols(), [&](const std::vector<std::size_t> &rows) {
    acc = gcd(acc, det_laurent(m.select_rows(rows)));
    return acc != LaurentPoly(1);
  });
  return acc;
}

/// Orbit structure behind H_0: for each P(pi)-orbit, the number of
/// P(pi')-orbits inside it.
inline std::vector<std::size_t> h0_orbit_splitting(const KnotGroup &knot, const PermRep &rep) {
  const FiniteSubgroup kernel = epsilon_kernel_image(knot, rep);
  std::vector<std::size_t> out;
  for (const auto &o : orbits(rep.images, rep.degree)) {
    std::size_t count = 0;
    std::vector<bool> seen(rep.degree, false);
    for (std::size_t p : o) {
      if (seen[p]) continue;
      ++count;
      for (std::size_t q : orbit(kernel.generators, rep.degree, p)) seen[q] = true;
    }
    out.push_back(count);
  }
  return out;
}

/// Delta_0 from the orbits: the product of t^d - 1 over P(pi)-orbits, d the
/// number of P(pi')-orbits in it.
inline LaurentPoly delta0_from_orbits(const KnotGroup &knot, const PermRep &rep) {
  LaurentPoly acc = 1;
  for (std::size_t d : h0_orbit_splitting(knot, rep))
    acc *= LaurentPoly::t(static_cast<long>(d)) - LaurentPoly(1);
  return unit_normalized(acc);
}

/// Delta_0 as the gcd of the N x N minors of d1, falling back on the orbit
/// formula when there are more than `cap` minors.
inline LaurentPoly delta0(const KnotGroup &knot, const PermRep &rep, const LaurentMatrix &d1,
                          std::size_t cap = kDefaultMinorCap) {
  if (detail::binomial(d1.rows(), d1.cols()) > cap) return delta0_from_orbits(knot, rep);
  return gcd_maximal_minors(d1, cap);
}

struct TwistedOptions {
  std::optional<std::size_t> deleted_generator;
  /// Relator dropped when there are as many relators as generators; the last
  /// one by default.
  std::optional<std::size_t> dropped_relator;
  std::size_t minor_cap = kDefaultMinorCap;
  /// Also compute the untwisted polynomial and test divisibility.
  bool check_divisibility = true;
};

struct TwistedResult {
  UnitNormalForm delta_rho;
  UnitNormalForm delta_0;
  UnitNormalForm wada_numerator;
  UnitNormalForm wada_denominator;
  std::size_t deleted_generator = 0;
  std::optional<std::size_t> dropped_relator;
  bool is_unit = false;
  std::optional<bool> divisible_by_alexander;
  std::optional<LaurentPoly> alexander;
};

/// Raised when Det(Phi(g) - I) vanishes for every generator; carries the gcd
/// of maximal minors of d2 with the first generator's block removed.
class DenominatorsVanish : public AllDenominatorsVanish {
public:
  DenominatorsVanish(const std::string &what, LaurentPoly numerator)
      : AllDenominatorsVanish(what), numerator_(std::move(numerator)) {}
  const LaurentPoly &numerator() const noexcept { return numerator_; }

private:
  LaurentPoly numerator_;
};

inline TwistedResult twisted_alexander_poly(const KnotGroup &knot, const PermRep &rep,
                                            const TwistedOptions &options = {});

/// Classical Alexander polynomial: the twisted one for the trivial degree-1
/// representation.
inline LaurentPoly alexander_polynomial(const KnotGroup &knot) {
  TwistedOptions opt;
  opt.check_divisibility = false;
  return twisted_alexander_poly(knot, PermRep::trivial(knot.generator_count()), opt).delta_rho.poly;
}

inline TwistedResult twisted_alexander_poly(const KnotGroup &knot, const PermRep &rep,
                                            const TwistedOptions &options) {
  const GroupPresentation &pres = knot.presentation;
  const std::size_t n = rep.degree, k = pres.generator_count();
  const TwistedJacobian jac = twisted_jacobian(pres, rep, knot.eps);
  TwistedResult res;

  std::vector<std::size_t> rows;
  if (pres.relator_count() == k && k > 0) {
    res.dropped_relator = options.dropped_relator.value_or(k - 1);
    if (*res.dropped_relator >= k) throw Error("dropped relator index out of range");
  } else if (options.dropped_relator) {
    throw Error("a relator is only dropped when there are as many relators as generators");
  }
  for (std::size_t r = 0; r < pres.relator_count(); ++r)
    if (r != res.dropped_relator)
      for (std::size_t i = 0; i < n; ++i) rows.push_back(r * n + i);

  auto denominator = [&](std::size_t g) {
    return det_laurent(jac.d1.block(g * n, 0, n, n));
  };
  auto numerator = [&](std::size_t g) {
    std::vector<std::size_t> cols;
    for (std::size_t h = 0; h < k; ++h)
      if (h != g)
        for (std::size_t i = 0; i < n; ++i) cols.push_back(h * n + i);
    return gcd_maximal_minors(jac.d2.select_rows(rows).select_cols(cols), options.minor_cap);
  };

  LaurentPoly den;
  if (options.deleted_generator) {
    res.deleted_generator = *options.deleted_generator;
    if (res.deleted_generator >= k) throw Error("deleted generator index out of range");
    den = denominator(res.deleted_generator);
    if (den.is_zero())
      throw Error("Det(Phi(" + pres.name(res.deleted_generator) + ") - I) vanishes");
  } else {
    std::size_t g = 0;
    for (; g < k; ++g) {
      den = denominator(g);
      if (!den.is_zero()) break;
    }
    if (g == k)
      throw DenominatorsVanish("Det(Phi(g) - I) vanishes for every generator",
                               k == 0 ? LaurentPoly(1) : numerator(0));
    res.deleted_generator = g;
  }

  const LaurentPoly num = numerator(res.deleted_generator);
  const LaurentPoly d0 = delta0(knot, rep, jac.d1, options.minor_cap);
  res.wada_numerator = normalize_unit(num);
  res.wada_denominator = normalize_unit(den);
  res.delta_0 = normalize_unit(d0);
  const auto quotient = exact_divide(num * d0, den);
  if (!quotient) throw DivisionFailed("Wada numerator times Delta_0 is not divisible by Det B");
  res.delta_rho = normalize_unit(*quotient);
  res.is_unit = res.delta_rho.poly == LaurentPoly(1);

  if (options.check_divisibility) {
    res.alexander = alexander_polynomial(knot);
    res.divisible_by_alexander = divides(*res.alexander, res.delta_rho.poly);
  }
  return res;
}

/// Cyclic shift matrix T with T^r = I, standing in for t.
inline IntMatrix evaluate_at_shift(const LaurentMatrix &m, std::size_t r) {
  IntMatrix out(m.rows() * r, m.cols() * r);
  const long rr = static_cast<long>(r);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto &[e, c] : m(i, j).terms()) {
        const std::size_t s = static_cast<std::size_t>(((e % rr) + rr) % rr);
        for (std::size_t a = 0; a < r; ++a) out(i * r + a, j * r + (a + s) % r) += c;
      }
  return out;
}

struct CoverModuleHomology {
  AbelianGroup cover;           // H_1 of the evaluated chain complex
  AbelianGroup module_quotient; // H_1(X^_inf) / (t^r - 1)
  std::size_t h0_correction_rank = 0;
};

/// Substitutes the r x r cyclic shift for t in the twisted chain complex and
/// takes H_1 = ker d1 / im d2 by Smith normal form. This is H_1 of the
/// (possibly disconnected) N r-fold cover for the product action. Its free
/// part contains ker(t^r - 1) on H_0(X^_inf), of rank sum over orbits of
/// gcd(r, d); removing it leaves H_1(X^_inf) / (t^r - 1).
inline CoverModuleHomology finite_cover_module_homology(const KnotGroup &knot, const PermRep &rep,
                                                        std::size_t r) {
  if (r == 0) throw Error("cover order must be at least 1");
  const TwistedJacobian jac = twisted_jacobian(knot.presentation, rep, knot.eps);
  const IntMatrix d2 = evaluate_at_shift(jac.d2, r);
  const IntMatrix d1 = evaluate_at_shift(jac.d1, r);
  CoverModuleHomology out;
  const AbelianGroup coker = cokernel_invariants(d2);
  out.cover.torsion = coker.torsion;
  out.cover.rank = coker.rank - integer_rank(d1);
  for (std::size_t d : h0_orbit_splitting(knot, rep)) out.h0_correction_rank += std::gcd(r, d);
  out.module_quotient = out.cover;
  if (out.module_quotient.rank < out.h0_correction_rank)
    throw Error("H_0 correction exceeds the rank of the cover");
  out.module_quotient.rank -= out.h0_correction_rank;
  return out;
}

} // namespace twalex
