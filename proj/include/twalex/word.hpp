#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace twalex {

/// One letter of a free-group word: a generator index raised to +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  Letter inverse() const noexcept { return {generator, -exponent}; }

  friend auto operator<=>(const Letter &, const Letter &) = default;
};

/// A word in the free group on dense generator indices. The empty word is the
/// identity. Words are not automatically reduced; see free_reduce.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(std::size_t g, int exponent = 1) {
    return Word{{Letter{g, exponent}}};
  }

  const std::vector<Letter> &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter &operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Appends a letter, cancelling it against the last letter when possible.
  /// Keeps an already reduced word reduced.
  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse())
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  void push_back(Letter l) { letters_.push_back(l); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(it->inverse());
    return w;
  }

  /// Sum of exponents of generator g.
  long exponent_sum(std::size_t g) const noexcept {
    long s = 0;
    for (const auto &l : letters_)
      if (l.generator == g) s += l.exponent;
    return s;
  }

  friend auto operator<=>(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

/// Unique freely reduced representative of w.
inline Word free_reduce(const Word &w) {
  Word out;
  for (const auto &l : w) out.push_reduced(l);
  return out;
}

/// Concatenation followed by free reduction.
inline Word operator*(const Word &a, const Word &b) {
  Word out = free_reduce(a);
  for (const auto &l : b) out.push_reduced(l);
  return out;
}

/// w^n for any integer n (negative powers use the inverse).
inline Word power(const Word &w, long n) {
  Word base = n < 0 ? w.inverse() : w;
  Word out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

} // namespace twalex
