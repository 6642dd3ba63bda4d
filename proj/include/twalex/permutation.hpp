#pragma once

#include "twalex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace twalex {

/// Bijection of {0, ..., n-1}. Acts on the right: i.(pq) = (i.p).q, so
/// products read left to right like words.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw Error("image vector is not a permutation");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
    return p;
  }

  /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree) {
    Permutation p = identity(degree);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                                 text[i] == ','))
        ++i;
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw Error("expected `(` in cycle notation");
      ++i;
      std::vector<std::size_t> cycle;
      while (true) {
        skip();
        if (i >= text.size()) throw Error("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw Error("expected point in cycle notation");
        cycle.push_back(std::stoul(std::string(text.substr(start, i - start))));
      }
      Permutation c = identity(degree);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (cycle[k] >= degree) throw Error("cycle point out of range");
        c.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      p = p * Permutation(c.images_);
      skip();
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t> &images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
    return p;
  }

  /// Apply this, then q.
  friend Permutation operator*(const Permutation &p, const Permutation &q) {
    Permutation out;
    out.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i) out.images_[i] = q.images_[p.images_[i]];
    return out;
  }

  Permutation pow(long n) const {
    Permutation base = n < 0 ? inverse() : *this;
    Permutation out = identity(degree());
    for (long k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
    return out;
  }

  /// q^-1 p q.
  Permutation conjugated_by(const Permutation &q) const { return q.inverse() * *this * q; }

  std::size_t order() const {
    std::size_t o = 1;
    for (auto len : cycle_type()) o = std::lcm(o, len);
    return o;
  }

  /// Cycle lengths including fixed points, sorted ascending.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  /// Cycle notation without fixed points; the identity prints as `()`.
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::size_t> images_;
};

/// Explicitly enumerated finite permutation group.
struct FiniteSubgroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements; // sorted

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const Permutation &p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
  bool is_trivial() const noexcept { return elements.size() <= 1; }
};

inline constexpr std::size_t kDefaultSubgroupCap = 1'000'000;

/// Breadth-first closure of `gens` under right multiplication.
inline FiniteSubgroup image_subgroup(const std::vector<Permutation> &gens, std::size_t degree,
                                     std::size_t cap = kDefaultSubgroupCap) {
  for (const auto &g : gens)
    if (g.degree() != degree) throw Error("generators of different degrees");
  FiniteSubgroup sub;
  sub.degree = degree;
  sub.generators = gens;
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation e = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens) {
      Permutation h = e * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw CapExceeded("subgroup has more than " + std::to_string(cap) + " elements");
        queue.push_back(std::move(h));
      }
    }
  }
  sub.elements.assign(seen.begin(), seen.end());
  return sub;
}

/// Orbit of `point` under the group generated by `gens`, sorted.
inline std::vector<std::size_t> orbit(const std::vector<Permutation> &gens, std::size_t degree,
                                      std::size_t point) {
  std::vector<Permutation> inverses;
  for (const auto &g : gens) inverses.push_back(g.inverse());
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> stack{point}, out;
  seen[point] = true;
  while (!stack.empty()) {
    std::size_t p = stack.back();
    stack.pop_back();
    out.push_back(p);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (std::size_t q : {gens[k][p], inverses[k][p]})
        if (!seen[q]) {
          seen[q] = true;
          stack.push_back(q);
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Orbits of the group generated by `gens`, each sorted, ordered by minimum.
inline std::vector<std::vector<std::size_t>> orbits(const std::vector<Permutation> &gens,
                                                    std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(degree, false);
  for (std::size_t p = 0; p < degree; ++p) {
    if (done[p]) continue;
    out.push_back(orbit(gens, degree, p));
    for (auto q : out.back()) done[q] = true;
  }
  return out;
}

inline bool is_transitive(const FiniteSubgroup &sub, std::size_t degree) {
  if (degree == 0) return true;
  std::vector<Permutation> gens = sub.elements.empty() ? sub.generators : sub.elements;
  return orbit(gens, degree, 0).size() == degree;
}

} // namespace twalex
