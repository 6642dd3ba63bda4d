#pragma once

// Slow, independent reference computations used only by the tests.

#include "twalex/twalex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using twalex::Integer;
using twalex::LaurentMatrix;
using twalex::LaurentPoly;
using twalex::Permutation;
using twalex::Word;
using Rational = boost::multiprecision::cpp_rational;

/// Fixed-seed generator shared by the property tests.
inline std::mt19937_64 &rng() {
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline LaurentPoly random_poly(long max_span = 5, long max_coeff = 6, long low_range = 3) {
  std::vector<Integer> c;
  const long span = uniform(0, max_span);
  for (long i = 0; i <= span; ++i) c.emplace_back(uniform(-max_coeff, max_coeff));
  return LaurentPoly(uniform(-low_range, low_range), c);
}

inline Word random_word(std::size_t generators, std::size_t max_len) {
  Word w;
  const long len = uniform(0, static_cast<long>(max_len));
  for (long i = 0; i < len; ++i)
    w.push_back({static_cast<std::size_t>(uniform(0, static_cast<long>(generators) - 1)),
                 uniform(0, 1) == 0 ? 1 : -1});
  return w;
}

/// Determinant by cofactor expansion along the first row.
inline LaurentPoly cofactor_det(const LaurentMatrix &m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    LaurentPoly term = m(0, j) * cofactor_det(m.select_rows(rows).select_cols(cols));
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

/// Integer determinant by Gaussian elimination over Q.
inline Integer rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

inline Integer int_det(const twalex::IntMatrix &m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  return rational_det(a);
}

/// Res(f, g) of ordinary polynomials (coefficient vectors, constant term
/// first) as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const std::vector<Integer> &f, const std::vector<Integer> &g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t s = m + n;
  if (s == 0) return 1;
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) a[i][i + k] = Rational(f[m - k]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) a[n + i][i + k] = Rational(g[n - k]);
  return rational_det(a);
}

/// Resultant of the unit-normalized parts, matching twalex::resultant.
inline Integer resultant(const LaurentPoly &f, const LaurentPoly &g) {
  return sylvester_resultant(twalex::unit_normalized(f).dense(),
                             twalex::unit_normalized(g).dense());
}

inline std::vector<Integer> t_power_minus_one(std::size_t r) {
  std::vector<Integer> c(r + 1, 0);
  c[0] = -1;
  c[r] = 1;
  return c;
}

/// D_k = gcd of all k x k minors, for k = 1..min(rows, cols).
inline std::vector<Integer> minor_gcds(const twalex::IntMatrix &m) {
  std::vector<Integer> out;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        twalex::IntMatrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rsel[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (csel[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        g = boost::multiprecision::gcd(g, twalex::abs(int_det(sub)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    out.push_back(g);
  }
  return out;
}

/// All permutations of 0..n-1 in lexicographic order.
inline std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Lexicographically least tuple in the conjugacy orbit of `images`.
inline std::vector<Permutation> conjugation_minimum(const std::vector<Permutation> &images,
                                                    const std::vector<Permutation> &sn) {
  std::vector<Permutation> best = images;
  for (const auto &s : sn) {
    std::vector<Permutation> c;
    for (const auto &p : images) c.push_back(p.conjugated_by(s));
    best = std::min(best, c);
  }
  return best;
}

/// Every homomorphism to S_n, by exhaustive enumeration of generator tuples.
inline std::vector<std::vector<Permutation>> all_homs(const twalex::GroupPresentation &pres,
                                                      std::size_t n) {
  const auto sn = symmetric_group(n);
  const std::size_t k = pres.generator_count();
  std::vector<std::vector<Permutation>> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    twalex::PermRep rep{n, {}};
    for (std::size_t g = 0; g < k; ++g) rep.images.push_back(sn[idx[g]]);
    if (twalex::satisfies_relators(pres, rep)) out.push_back(rep.images);
    std::size_t g = 0;
    while (g < k && ++idx[g] == sn.size()) idx[g++] = 0;
    if (g == k) break;
  }
  return out;
}

/// Images of all words of length <= max_len with exponent sum zero under eps.
inline std::set<Permutation> kernel_images_by_words(const twalex::KnotGroup &knot,
                                                    const twalex::PermRep &rep,
                                                    std::size_t max_len) {
  std::set<Permutation> out{Permutation::identity(rep.degree)};
  const std::size_t k = knot.generator_count();
  std::vector<Permutation> letters;
  std::vector<long> weights;
  for (std::size_t g = 0; g < k; ++g) {
    letters.push_back(rep.images[g]);
    weights.push_back(knot.eps(g));
    letters.push_back(rep.images[g].inverse());
    weights.push_back(-knot.eps(g));
  }
  std::function<void(const Permutation &, long, std::size_t)> walk =
      [&](const Permutation &p, long e, std::size_t len) {
        if (e == 0) out.insert(p);
        if (len == max_len) return;
        for (std::size_t i = 0; i < letters.size(); ++i) walk(p * letters[i], e + weights[i], len + 1);
      };
  walk(Permutation::identity(rep.degree), 0, 0);
  return out;
}

/// The order-8 group <xi | xi^2> x| (Z/2)^2 with (i, a0, a1) encoded in three
/// bits; xi^-1 (a0, a1) xi = (a1, a0). Returns the closure of `gens`.
inline std::set<int> z2_semidirect_closure(const std::vector<int> &gens) {
  auto shift = [](int e) { return e & 1; };
  auto a0 = [](int e) { return (e >> 1) & 1; };
  auto a1 = [](int e) { return (e >> 2) & 1; };
  auto make = [](int s, int b0, int b1) { return s | (b0 << 1) | (b1 << 2); };
  auto mul = [&](int x, int y) {
    // (i, a)(j, b) = (i + j, theta^j(a) + b), theta swapping the coordinates.
    int c0 = a0(x), c1 = a1(x);
    if (shift(y) == 1) std::swap(c0, c1);
    return make(shift(x) ^ shift(y), c0 ^ a0(y), c1 ^ a1(y));
  };
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int h = mul(e, g);
      if (seen.insert(h).second) stack.push_back(h);
    }
  }
  return seen;
}

} // namespace oracle

namespace twalex {

// Readable failure messages in gtest.
inline void PrintTo(const LaurentPoly &f, std::ostream *os) { *os << to_string(f); }
inline void PrintTo(const Permutation &p, std::ostream *os) { *os << p.cycles(); }

} // namespace twalex
