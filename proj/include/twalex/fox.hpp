#pragma once

#include "twalex/integer.hpp"
#include "twalex/word.hpp"

#include <map>
#include <utility>

namespace twalex {

/// Element of the integral group ring of a free group: a finite Z-combination
/// of freely reduced words. Zero coefficients are never stored.
class GroupRingElement {
public:
  GroupRingElement() = default;
  static GroupRingElement of(const Word &w, const Integer &c = 1) {
    GroupRingElement e;
    e.add(w, c);
    return e;
  }
  static GroupRingElement one() { return of(Word{}); }

  void add(const Word &w, const Integer &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(free_reduce(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Word, Integer> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  GroupRingElement &operator+=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupRingElement &operator-=(const GroupRingElement &o) {
    for (const auto &[w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
    GroupRingElement out;
    for (const auto &[u, c] : a.terms_)
      for (const auto &[v, d] : b.terms_) out.add(u * v, c * d);
    return out;
  }
  friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;

private:
  std::map<Word, Integer> terms_;
};

/// Fox free derivative dw/dg, using dg/dg = 1, dg^-1/dg = -g^-1 and
/// d(uv)/dg = du/dg + u dv/dg.
inline GroupRingElement fox_derivative(const Word &w, std::size_t g) {
  GroupRingElement out;
  Word prefix;
  for (const auto &l : w) {
    if (l.generator == g) {
      if (l.exponent > 0) {
        out.add(prefix, 1);
      } else {
        Word p = prefix;
        p.push_reduced(l);
        out.add(p, -1);
      }
    }
    prefix.push_reduced(l);
  }
  return out;
}

} // namespace twalex
