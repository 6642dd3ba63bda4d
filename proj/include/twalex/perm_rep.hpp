#pragma once

#include "twalex/abelianization.hpp"
#include "twalex/errors.hpp"
#include "twalex/permutation.hpp"
#include "twalex/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace twalex {

/// Homomorphism from a presented group to S_degree, given on generators.
struct PermRep {
  std::size_t degree = 0;
  std::vector<Permutation> images;

  static PermRep trivial(std::size_t generators, std::size_t degree = 1) {
    return {degree, std::vector<Permutation>(generators, Permutation::identity(degree))};
  }

  bool is_trivial() const {
    return std::all_of(images.begin(), images.end(),
                       [](const Permutation &p) { return p.is_identity(); });
  }

  friend auto operator<=>(const PermRep &, const PermRep &) = default;
};

inline Permutation evaluate(const PermRep &rep, const Word &w) {
  Permutation out = Permutation::identity(rep.degree);
  for (const auto &l : w)
    out = out * (l.exponent > 0 ? rep.images.at(l.generator)
                                : rep.images.at(l.generator).inverse());
  return out;
}

inline bool satisfies_relators(const GroupPresentation &pres, const PermRep &rep) {
  if (rep.images.size() != pres.generator_count()) return false;
  for (const auto &p : rep.images)
    if (p.degree() != rep.degree) return false;
  for (const auto &r : pres.relators())
    if (!evaluate(rep, r.word()).is_identity()) return false;
  return true;
}

/// Throws RepInvalid when some relator does not map to the identity.
inline void validate(const GroupPresentation &pres, const PermRep &rep) {
  if (rep.images.size() != pres.generator_count())
    throw RepInvalid("representation has " + std::to_string(rep.images.size()) +
                     " images for " + std::to_string(pres.generator_count()) + " generators");
  for (const auto &p : rep.images)
    if (p.degree() != rep.degree) throw RepInvalid("image of the wrong degree");
  for (std::size_t i = 0; i < pres.relator_count(); ++i)
    if (!evaluate(rep, pres.relator(i).word()).is_identity())
      throw RepInvalid("relator " + std::to_string(i) + " does not map to the identity");
}

inline FiniteSubgroup image_group(const PermRep &rep, std::size_t cap = kDefaultSubgroupCap) {
  return image_subgroup(rep.images, rep.degree, cap);
}

/// P(pi') = {P(w) : eps(w) = 0}, generated by the conjugates of
/// P(g) P(x0)^-eps(g) by the powers of P(x0).
inline FiniteSubgroup epsilon_kernel_image(const KnotGroup &knot, const PermRep &rep,
                                           std::size_t cap = kDefaultSubgroupCap) {
  const Permutation x = evaluate(rep, knot.meridian);
  const std::size_t order = x.order();
  std::set<Permutation> gens;
  for (std::size_t g = 0; g < knot.generator_count(); ++g) {
    const Permutation u = rep.images.at(g) * x.pow(-knot.eps(g));
    Permutation conj = Permutation::identity(rep.degree);
    for (std::size_t k = 0; k < order; ++k) {
      const Permutation c = u.conjugated_by(conj);
      if (!c.is_identity()) gens.insert(c);
      conj = conj * x;
    }
  }
  return image_subgroup({gens.begin(), gens.end()}, rep.degree, cap);
}

/// Least r >= 1 such that P(x0)^r centralizes P(pi').
inline std::size_t least_period(const KnotGroup &knot, const PermRep &rep) {
  const FiniteSubgroup kernel = epsilon_kernel_image(knot, rep);
  const Permutation x = evaluate(rep, knot.meridian);
  Permutation xr = x;
  for (std::size_t r = 1;; ++r, xr = xr * x) {
    const bool central = std::all_of(kernel.generators.begin(), kernel.generators.end(),
                                     [&](const Permutation &a) { return a * xr == xr * a; });
    if (central) return r;
  }
}

/// Limits for search_homs. The node budget counts candidate assignments in
/// the backtracking tree.
struct SearchOptions {
  std::uint64_t node_budget = 20'000'000;
  unsigned threads = 1;
};

struct SearchResult {
  std::vector<PermRep> reps; // lexicographically sorted
  std::uint64_t nodes = 0;
  bool truncated = false;
  bool deduplicated = true;
};

/// Search ran out of nodes; `partial` holds everything found within budget.
class BudgetExhausted : public Error {
public:
  explicit BudgetExhausted(SearchResult partial)
      : Error("homomorphism search exhausted its node budget"), partial_(std::move(partial)) {}
  const SearchResult &partial() const noexcept { return partial_; }

private:
  SearchResult partial_;
};

/// Conjugacy classes are only collapsed up to this degree (the check scans S_N).
inline constexpr std::size_t kMaxDedupDegree = 8;

/// Lexicographically least permutation of each cycle type, in lexicographic
/// order. Fixed points come first, then cycles of increasing length.
inline std::vector<Permutation> conjugacy_class_minima(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining,
                                                          std::size_t min_part) {
    if (remaining == 0) {
      std::vector<std::size_t> img(n);
      std::size_t start = 0;
      for (auto len : parts) {
        for (std::size_t k = 0; k < len; ++k) img[start + k] = start + (k + 1) % len;
        start += len;
      }
      out.emplace_back(std::move(img));
      return;
    }
    for (std::size_t p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Point-by-point backtracking with coset-table style scanning of every
// relator from every point: a relator trace that closes wrongly prunes, a
// trace with a single missing step defines that step.
class HomSearch {
public:
  HomSearch(const std::vector<std::vector<Letter>> &relators, std::size_t generators,
            std::size_t degree, bool dedup, const std::vector<Permutation> *all_perms)
      : relators_(relators), k_(generators), n_(degree), dedup_(dedup),
        all_perms_(all_perms), img_(generators, std::vector<long>(degree, -1)),
        pre_(generators, std::vector<long>(degree, -1)) {}

  struct Found {
    std::uint64_t node;
    PermRep rep;
  };

  // Runs the partition where generator 0 maps to `first`.
  void run(const Permutation &first, std::uint64_t limit) {
    limit_ = limit;
    if (!count_node()) return;
    for (std::size_t p = 0; p < n_; ++p)
      if (!assign(0, p, static_cast<long>(first[p]))) return;
    if (!propagate()) return;
    dfs();
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted() const noexcept { return exhausted_; }
  std::vector<Found> &found() noexcept { return found_; }

private:
  bool count_node() {
    ++nodes_;
    if (nodes_ > limit_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  long step(std::size_t p, const Letter &l) const {
    return l.exponent > 0 ? img_[l.generator][p] : pre_[l.generator][p];
  }
  long back(std::size_t p, const Letter &l) const {
    return l.exponent > 0 ? pre_[l.generator][p] : img_[l.generator][p];
  }

  bool assign(std::size_t g, std::size_t p, long v) {
    if (img_[g][p] >= 0) return img_[g][p] == v;
    if (pre_[g][static_cast<std::size_t>(v)] >= 0) return false;
    img_[g][p] = v;
    pre_[g][static_cast<std::size_t>(v)] = static_cast<long>(p);
    trail_.emplace_back(g, p);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [g, p] = trail_.back();
      trail_.pop_back();
      pre_[g][static_cast<std::size_t>(img_[g][p])] = -1;
      img_[g][p] = -1;
    }
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &rel : relators_) {
        const std::size_t len = rel.size();
        for (std::size_t p = 0; p < n_; ++p) {
          std::size_t f = p, i = 0;
          while (i < len) {
            const long nx = step(f, rel[i]);
            if (nx < 0) break;
            f = static_cast<std::size_t>(nx);
            ++i;
          }
          if (i == len) {
            if (f != p) return false;
            continue;
          }
          std::size_t b = p, j = len;
          while (j > i + 1) {
            const long pv = back(b, rel[j - 1]);
            if (pv < 0) break;
            b = static_cast<std::size_t>(pv);
            --j;
          }
          if (j != i + 1) continue;
          const Letter &l = rel[i];
          const bool ok = l.exponent > 0 ? assign(l.generator, f, static_cast<long>(b))
                                         : assign(l.generator, b, static_cast<long>(f));
          if (!ok) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  void dfs() {
    std::size_t g = k_, p = 0;
    for (std::size_t gg = 1; gg < k_ && g == k_; ++gg)
      for (std::size_t pp = 0; pp < n_; ++pp)
        if (img_[gg][pp] < 0) {
          g = gg;
          p = pp;
          break;
        }
    if (g == k_) {
      leaf();
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (pre_[g][v] >= 0) continue;
      if (!count_node()) return;
      const std::size_t mark = trail_.size();
      if (assign(g, p, static_cast<long>(v)) && propagate()) dfs();
      undo_to(mark);
      if (exhausted_) return;
    }
  }

  bool canonical() const {
    for (const auto &sigma : *all_perms_) {
      const Permutation sinv = sigma.inverse();
      int cmp = 0;
      for (std::size_t g = 0; g < k_ && cmp == 0; ++g)
        for (std::size_t j = 0; j < n_; ++j) {
          const auto c = static_cast<long>(sigma[static_cast<std::size_t>(img_[g][sinv[j]])]);
          if (c != img_[g][j]) {
            cmp = c < img_[g][j] ? -1 : 1;
            break;
          }
        }
      if (cmp < 0) return false;
    }
    return true;
  }

  void leaf() {
    if (dedup_ && !canonical()) return;
    PermRep rep;
    rep.degree = n_;
    for (std::size_t g = 0; g < k_; ++g) {
      std::vector<std::size_t> v(n_);
      for (std::size_t p = 0; p < n_; ++p) v[p] = static_cast<std::size_t>(img_[g][p]);
      rep.images.emplace_back(std::move(v));
    }
    found_.push_back({nodes_, std::move(rep)});
  }

  const std::vector<std::vector<Letter>> &relators_;
  std::size_t k_, n_;
  bool dedup_;
  const std::vector<Permutation> *all_perms_;
  std::vector<std::vector<long>> img_, pre_;
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  std::uint64_t nodes_ = 0;
  std::uint64_t limit_ = 0;
  bool exhausted_ = false;
  std::vector<Found> found_;
};

} // namespace detail

/// All homomorphisms pres -> S_degree up to simultaneous conjugation.
///
/// Generator 0 ranges over the lexicographically least element of each
/// conjugacy class; the remaining images are filled point by point with
/// relator scanning. A solution is kept only if its image tuple is the
/// lexicographic minimum of its conjugacy orbit (degrees up to
/// kMaxDedupDegree). Work is partitioned by the image of generator 0; with
/// several threads the partitions run concurrently and the merged result is
/// identical to a sequential run. Throws BudgetExhausted, carrying the
/// partial result, when the node budget is exceeded.
inline SearchResult search_homs(const GroupPresentation &pres, std::size_t degree,
                                const SearchOptions &options = {}) {
  if (degree == 0) throw Error("search degree must be at least 1");
  SearchResult result;
  const std::size_t k = pres.generator_count();
  if (k == 0) {
    result.reps.push_back({degree, {}});
    return result;
  }
  std::vector<std::vector<Letter>> relators;
  for (const auto &r : pres.relators()) {
    Word w = r.word();
    if (!w.empty()) relators.push_back(w.letters());
  }
  result.deduplicated = degree <= kMaxDedupDegree;
  std::vector<Permutation> all_perms;
  if (result.deduplicated) {
    std::vector<std::size_t> v(degree);
    std::iota(v.begin(), v.end(), std::size_t{0});
    do {
      all_perms.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    all_perms.erase(all_perms.begin()); // identity
  }
  const std::vector<Permutation> firsts = conjugacy_class_minima(degree);
  const std::uint64_t budget = options.node_budget;

  struct Partition {
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<detail::HomSearch::Found> found;
  };
  std::vector<Partition> parts(firsts.size());
  auto run_one = [&](std::size_t i, std::uint64_t limit) {
    detail::HomSearch s(relators, k, degree, result.deduplicated, &all_perms);
    s.run(firsts[i], limit);
    parts[i].nodes = s.nodes();
    parts[i].exhausted = s.exhausted();
    parts[i].found = std::move(s.found());
  };

  if (options.threads <= 1) {
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      run_one(i, budget - used);
      used += parts[i].nodes;
      if (parts[i].exhausted) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < firsts.size(); i = next++) run_one(i, budget);
      });
    for (auto &th : pool) th.join();
  }

  // Merge as if the partitions had run in order against one shared budget.
  std::uint64_t offset = 0;
  for (auto &part : parts) {
    for (auto &f : part.found)
      if (offset + f.node <= budget) result.reps.push_back(std::move(f.rep));
    offset += part.nodes;
    if (offset > budget || part.exhausted) {
      result.truncated = true;
      break;
    }
  }
  result.nodes = std::min(offset, budget);
  std::sort(result.reps.begin(), result.reps.end());
  for (const auto &rep : result.reps)
    if (!satisfies_relators(pres, rep)) throw RepInvalid("search produced an invalid image");
  if (result.truncated) throw BudgetExhausted(std::move(result));
  return result;
}

} // namespace twalex
