#pragma once

#include "twalex/errors.hpp"
#include "twalex/integer.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twalex {

namespace detail {

// Dense ordinary polynomial, index = degree, no trailing zeros, empty = 0.
using Poly = std::vector<Integer>;

inline void trim(Poly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long degree(const Poly &p) { return static_cast<long>(p.size()) - 1; }

inline const Integer &lead(const Poly &p) { return p.back(); }

inline Poly sub(Poly a, const Poly &b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline Poly scale(Poly a, const Integer &c) {
  if (c == 0) return {};
  for (auto &x : a) x *= c;
  return a;
}

inline Poly mul(const Poly &a, const Poly &b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

inline Integer content(const Poly &p) {
  Integer c = 0;
  for (const auto &x : p) {
    c = gcd(c, x);
    if (c == 1) break;
  }
  return c;
}

inline Poly divide_scalar(Poly p, const Integer &c) {
  for (auto &x : p) x /= c;
  return p;
}

inline Poly primitive_part(const Poly &p) {
  if (p.empty()) return p;
  return divide_scalar(p, content(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b. Requires deg a >= deg b >= 0.
inline Poly pseudo_remainder(Poly a, const Poly &b) {
  const long db = degree(b);
  long e = degree(a) - db + 1;
  const Integer &lb = lead(b);
  while (!a.empty() && degree(a) >= db) {
    const long shift = degree(a) - db;
    const Integer la = lead(a);
    for (auto &x : a) x *= lb;
    for (long i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --e;
  }
  if (e > 0) a = scale(std::move(a), pow(lb, static_cast<std::size_t>(e)));
  return a;
}

// Exact quotient a / b in Z[t], or nullopt when b does not divide a.
inline std::optional<Poly> exact_quotient(Poly a, const Poly &b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Poly{};
  const long db = degree(b);
  if (degree(a) < db) return std::nullopt;
  Poly q(static_cast<std::size_t>(degree(a) - db + 1));
  while (!a.empty() && degree(a) >= db) {
    const long shift = degree(a) - db;
    Integer rem;
    Integer c;
    boost::multiprecision::divide_qr(lead(a), lead(b), c, rem);
    if (rem != 0) return std::nullopt;
    q[shift] = c;
    for (long i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Subresultant gcd over Z[t]; result is primitive up to the content gcd and
// has positive leading coefficient.
inline Poly poly_gcd(Poly a, Poly b) {
  if (degree(b) > degree(a)) std::swap(a, b);
  if (b.empty()) {
    if (!a.empty() && lead(a) < 0) a = scale(std::move(a), -1);
    return a;
  }
  const Integer d = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  Integer g = 1, h = 1;
  while (true) {
    const long delta = degree(a) - degree(b);
    Poly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = Poly{1};
      break;
    }
    a = std::move(b);
    b = divide_scalar(std::move(r), g * pow(h, static_cast<std::size_t>(delta)));
    g = lead(a);
    if (delta == 0) {
      // h unchanged
    } else {
      h = pow(g, static_cast<std::size_t>(delta)) /
          pow(h, static_cast<std::size_t>(delta - 1));
    }
  }
  Poly out = scale(primitive_part(b), d);
  if (lead(out) < 0) out = scale(std::move(out), -1);
  return out;
}

// Subresultant resultant over Z[t].
inline Integer poly_resultant(Poly a, Poly b) {
  if (a.empty() || b.empty()) return 0;
  const Integer ca = content(a), cb = content(b);
  a = divide_scalar(std::move(a), ca);
  b = divide_scalar(std::move(b), cb);
  Integer g = 1, h = 1;
  int s = 1;
  const Integer t = pow(ca, static_cast<std::size_t>(degree(b))) *
                    pow(cb, static_cast<std::size_t>(degree(a)));
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
  }
  while (degree(b) > 0) {
    const long delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    b = divide_scalar(std::move(r), g * pow(h, static_cast<std::size_t>(delta)));
    g = lead(a);
    if (delta != 0)
      h = pow(g, static_cast<std::size_t>(delta)) /
          pow(h, static_cast<std::size_t>(delta - 1));
  }
  const long da = degree(a);
  const Integer hb = da == 0 ? Integer(1)
                             : pow(lead(b), static_cast<std::size_t>(da)) /
                                   pow(h, static_cast<std::size_t>(da - 1));
  return s * t * hb;
}

} // namespace detail

/// Element of Z[t, t^-1]. Stored densely from the lowest nonzero exponent;
/// the zero polynomial has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {} // NOLINT
  LaurentPoly(const Integer &constant) {                          // NOLINT
    if (constant != 0) coeffs_.push_back(constant);
  }
  LaurentPoly(long low, std::vector<Integer> coeffs)
      : low_(low), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly monomial(const Integer &c, long exponent) {
    return LaurentPoly(exponent, {c});
  }
  static LaurentPoly t(long exponent = 1) { return monomial(1, exponent); }

  /// Builds from (exponent, coefficient) pairs in any order; repeats add up.
  static LaurentPoly from_terms(const std::vector<std::pair<long, Integer>> &terms) {
    LaurentPoly out;
    for (const auto &[e, c] : terms) out += monomial(c, e);
    return out;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long low() const noexcept { return low_; }
  long high() const noexcept {
    return low_ + static_cast<long>(coeffs_.size()) - 1;
  }
  /// Width of the exponent range; 0 for units and constants.
  long span() const noexcept { return is_zero() ? 0 : high() - low(); }

  Integer coefficient(long e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const Integer &leading() const { return coeffs_.back(); }
  const Integer &trailing() const { return coeffs_.front(); }

  /// Nonzero (exponent, coefficient) terms in increasing exponent order.
  std::vector<std::pair<long, Integer>> terms() const {
    std::vector<std::pair<long, Integer>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<long>(i), coeffs_[i]);
    return out;
  }

  /// True for +-t^i.
  bool is_unit() const {
    return coeffs_.size() == 1 && abs(coeffs_[0]) == 1;
  }

  /// Multiplies by t^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.low_ += k;
    return out;
  }

  /// Coefficients of t^low .. t^high as an ordinary polynomial.
  detail::Poly dense() const { return coeffs_; }

  static LaurentPoly from_dense(const detail::Poly &p, long low = 0) {
    return LaurentPoly(low, p);
  }

  Integer evaluate(const Integer &x) const {
    if (is_zero()) return 0;
    if (low_ < 0) throw Error("cannot evaluate negative powers at an integer");
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc * pow(x, static_cast<std::size_t>(low_));
  }

  /// Substitutes t -> t^k for k >= 1.
  LaurentPoly substitute_power(long k) const {
    LaurentPoly out;
    for (const auto &[e, c] : terms()) out += monomial(c, e * k);
    return out;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
  }

  LaurentPoly &operator+=(const LaurentPoly &o) { return add(o, 1); }
  LaurentPoly &operator-=(const LaurentPoly &o) { return add(o, -1); }

  LaurentPoly &operator*=(const LaurentPoly &o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.low_ + b.low_, detail::mul(a.coeffs_, b.coeffs_));
  }

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

private:
  LaurentPoly &add(const LaurentPoly &o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    const long lo = std::min(low_, o.low_);
    const long hi = std::max(high(), o.high());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto &slot = c[static_cast<std::size_t>(o.low_ - lo) + i];
      if (sign > 0)
        slot += o.coeffs_[i];
      else
        slot -= o.coeffs_[i];
    }
    low_ = lo;
    coeffs_ = std::move(c);
    normalize();
    return *this;
  }

  void normalize() {
    detail::trim(coeffs_);
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
    if (lead_zeros > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead_zeros));
      low_ += static_cast<long>(lead_zeros);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  long low_ = 0;
  std::vector<Integer> coeffs_;
};

/// f = sign * t^shift * poly with poly in Z[t], poly(0) != 0 and a positive
/// leading coefficient. Zero has shift 0 and sign +1.
struct UnitNormalForm {
  LaurentPoly poly;
  long shift = 0;
  int sign = 1;

  LaurentPoly original() const { return poly.shifted(shift) * LaurentPoly(sign); }

  friend bool operator==(const UnitNormalForm &, const UnitNormalForm &) = default;
};

inline UnitNormalForm normalize_unit(const LaurentPoly &f) {
  if (f.is_zero()) return {};
  UnitNormalForm out;
  out.shift = f.low();
  out.sign = f.leading() < 0 ? -1 : 1;
  out.poly = f.shifted(-f.low());
  if (out.sign < 0) out.poly = -out.poly;
  return out;
}

/// Representative of f modulo units (+-t^i).
inline LaurentPoly unit_normalized(const LaurentPoly &f) { return normalize_unit(f).poly; }

/// True when f and g differ by a unit of Z[t, t^-1].
inline bool associates(const LaurentPoly &f, const LaurentPoly &g) {
  return unit_normalized(f) == unit_normalized(g);
}

/// Exact quotient f / g in Z[t, t^-1], or nullopt if g does not divide f.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly &f, const LaurentPoly &g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return LaurentPoly{};
  auto q = detail::exact_quotient(f.dense(), g.dense());
  if (!q) return std::nullopt;
  return LaurentPoly::from_dense(*q, f.low() - g.low());
}

inline bool divides(const LaurentPoly &g, const LaurentPoly &f) {
  return exact_divide(f, g).has_value();
}

/// gcd of two Laurent polynomials, unit-normalized.
inline LaurentPoly gcd(const LaurentPoly &f, const LaurentPoly &g) {
  if (f.is_zero()) return unit_normalized(g);
  if (g.is_zero()) return unit_normalized(f);
  return LaurentPoly::from_dense(
      detail::poly_gcd(unit_normalized(f).dense(), unit_normalized(g).dense()));
}

/// gcd of a list, folded pairwise with early exit once the gcd is 1.
/// Returns 0 when every input is zero.
inline LaurentPoly gcd_polys(const std::vector<LaurentPoly> &fs) {
  LaurentPoly acc;
  for (const auto &f : fs) {
    acc = gcd(acc, f);
    if (acc == LaurentPoly(1)) break;
  }
  return acc;
}

/// Resultant of the unit-normalized ordinary polynomial parts.
inline Integer resultant(const LaurentPoly &f, const LaurentPoly &g) {
  if (f.is_zero() || g.is_zero()) throw ZeroArgument("resultant of the zero polynomial");
  return detail::poly_resultant(unit_normalized(f).dense(), unit_normalized(g).dense());
}

/// Res(f, t^r - 1).
inline Integer cyclic_resultant(const LaurentPoly &f, std::size_t r) {
  if (r == 0) throw Error("cyclic resultant needs r >= 1");
  if (f.is_zero()) throw ZeroArgument("cyclic resultant of the zero polynomial");
  return resultant(f, LaurentPoly::t(static_cast<long>(r)) - LaurentPoly(1));
}

/// Human-readable form such as `t^4 - t^3 + t - 1`.
inline std::string to_string(const LaurentPoly &f, std::string_view var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  auto terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto &[e, c] = *it;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag);
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Parses the output format of to_string, also accepting `2*t^3`, `t^(-1)`
/// and arbitrary whitespace.
inline LaurentPoly parse_laurent(std::string_view text, char var = 't') {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty polynomial", 1, 1);
  LaurentPoly out;
  std::size_t i = 0;
  auto fail = [&](const std::string &msg) { throw ParseError(msg, 1, i + 1); };
  auto read_int = [&]() {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected `+` or `-`");
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      coeff = parse_integer(s.substr(start, i - start));
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    long exponent = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        exponent = std::stol(read_int());
        if (paren) {
          if (i >= s.size() || s[i] != ')') fail("expected `)`");
          ++i;
        }
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    out += LaurentPoly::monomial(coeff * sign, exponent);
  }
  return out;
}

} // namespace twalex
