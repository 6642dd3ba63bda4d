#pragma once

#include "twalex/errors.hpp"
#include "twalex/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twalex {

/// A relation lhs = rhs. Kept split so Jacobians can be evaluated as
/// Phi(d lhs) - Phi(d rhs), which matches the classical printed Fox rows.
struct Relator {
  Word lhs;
  Word rhs;

  /// The relator as a single freely reduced word lhs * rhs^-1.
  Word word() const { return lhs * rhs.inverse(); }

  friend bool operator==(const Relator &, const Relator &) = default;
};

/// Finite presentation with dense generator indices. Names exist for I/O only.
class GroupPresentation {
public:
  GroupPresentation() = default;
  GroupPresentation(std::vector<std::string> names, std::vector<Relator> relators,
                    std::optional<std::size_t> meridian = std::nullopt)
      : names_(std::move(names)), relators_(std::move(relators)),
        meridian_(meridian) {
    for (auto &r : relators_) {
      r.lhs = free_reduce(r.lhs);
      r.rhs = free_reduce(r.rhs);
      check_word(r.lhs);
      check_word(r.rhs);
    }
    if (meridian_ && *meridian_ >= names_.size())
      throw Error("meridian index out of range");
  }

  std::size_t generator_count() const noexcept { return names_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  const std::string &name(std::size_t g) const { return names_.at(g); }
  const std::vector<Relator> &relators() const noexcept { return relators_; }
  const Relator &relator(std::size_t i) const { return relators_.at(i); }
  std::optional<std::size_t> meridian() const noexcept { return meridian_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  GroupPresentation with_relators(std::vector<Relator> relators) const {
    return {names_, std::move(relators), meridian_};
  }

  friend bool operator==(const GroupPresentation &,
                         const GroupPresentation &) = default;

private:
  void check_word(const Word &w) const {
    for (const auto &l : w)
      if (l.generator >= names_.size())
        throw Error("relator uses undeclared generator index " +
                    std::to_string(l.generator));
  }

  std::vector<std::string> names_;
  std::vector<Relator> relators_;
  std::optional<std::size_t> meridian_;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Token {
  std::string_view text;
  std::size_t column; // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

} // namespace detail

/// Parses the line-oriented presentation format:
///
///     # comment
///     gens: x a
///     rel: a x x a = x a x
///     meridian: x
///
/// Word tokens are `g`, `g^-1`, or `1` for the identity.
inline GroupPresentation parse_presentation(std::string_view text,
                                            std::vector<ParseWarning> *warnings = nullptr) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  bool have_gens = false;
  std::vector<Relator> relators;
  std::optional<std::size_t> meridian;

  auto parse_word = [&](const std::vector<detail::Token> &tokens, std::size_t line) {
    Word w;
    for (const auto &tok : tokens) {
      std::string_view name = tok.text;
      int exponent = 1;
      if (name == "1") continue;
      if (auto caret = name.find('^'); caret != std::string_view::npos) {
        if (name.substr(caret) != "^-1")
          throw ParseError("expected `g` or `g^-1`, got `" + std::string(name) + "`",
                           line, tok.column);
        exponent = -1;
        name = name.substr(0, caret);
      }
      if (!detail::is_identifier(name))
        throw ParseError("invalid generator token `" + std::string(tok.text) + "`",
                         line, tok.column);
      auto it = index.find(name);
      if (it == index.end())
        throw ParseError("undeclared generator `" + std::string(name) + "`", line,
                         tok.column);
      w.push_back({it->second, exponent});
    }
    return free_reduce(w);
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size()) continue;

    std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos)
      throw ParseError("expected `key:`", line_no, first + 1);
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.remove_suffix(1);
    std::string_view body = line.substr(colon + 1);
    std::size_t body_offset = colon + 1;

    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate `gens:` line", line_no, first + 1);
      have_gens = true;
      for (const auto &tok : detail::tokenize(body, body_offset)) {
        if (!detail::is_identifier(tok.text))
          throw ParseError("invalid generator name `" + std::string(tok.text) + "`",
                           line_no, tok.column);
        if (index.count(tok.text) != 0)
          throw ParseError("duplicate generator `" + std::string(tok.text) + "`",
                           line_no, tok.column);
        index.emplace(std::string(tok.text), names.size());
        names.emplace_back(tok.text);
      }
      if (names.empty())
        throw ParseError("empty generator list", line_no, colon + 2);
    } else if (key == "rel") {
      if (!have_gens)
        throw ParseError("`rel:` before `gens:`", line_no, first + 1);
      auto tokens = detail::tokenize(body, body_offset);
      std::vector<detail::Token> lhs_tokens, rhs_tokens;
      bool seen_eq = false;
      for (const auto &tok : tokens) {
        if (tok.text == "=") {
          if (seen_eq) throw ParseError("more than one `=`", line_no, tok.column);
          seen_eq = true;
          continue;
        }
        if (tok.text.find('=') != std::string_view::npos)
          throw ParseError("`=` must be separated by spaces", line_no, tok.column);
        (seen_eq ? rhs_tokens : lhs_tokens).push_back(tok);
      }
      if (lhs_tokens.empty() || (seen_eq && rhs_tokens.empty()))
        throw ParseError("empty side of relator (use `1` for the identity)", line_no,
                         colon + 2);
      Relator rel{parse_word(lhs_tokens, line_no), parse_word(rhs_tokens, line_no)};
      if (rel.word().empty() && warnings != nullptr)
        warnings->push_back({line_no, "relator reduces to the identity"});
      relators.push_back(std::move(rel));
    } else if (key == "meridian") {
      if (!have_gens)
        throw ParseError("`meridian:` before `gens:`", line_no, first + 1);
      auto tokens = detail::tokenize(body, body_offset);
      if (tokens.size() != 1)
        throw ParseError("expected exactly one meridian generator", line_no, colon + 2);
      auto it = index.find(tokens[0].text);
      if (it == index.end())
        throw ParseError("undeclared generator `" + std::string(tokens[0].text) + "`",
                         line_no, tokens[0].column);
      meridian = it->second;
    } else {
      throw ParseError("unknown key `" + std::string(key) + "`", line_no, first + 1);
    }
  }
  if (!have_gens) throw ParseError("empty generator list", 1, 1);
  return {std::move(names), std::move(relators), meridian};
}

inline std::string word_to_text(const GroupPresentation &pres, const Word &w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto &l : w) {
    if (!out.empty()) out += ' ';
    out += pres.name(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

/// Canonical text form; parse_presentation(to_text(p)) == p.
inline std::string to_text(const GroupPresentation &pres) {
  std::string out = "gens:";
  for (const auto &n : pres.names()) out += " " + n;
  out += '\n';
  for (const auto &r : pres.relators()) {
    out += "rel: " + word_to_text(pres, r.lhs);
    if (!r.rhs.empty()) out += " = " + word_to_text(pres, r.rhs);
    out += '\n';
  }
  if (pres.meridian()) out += "meridian: " + pres.name(*pres.meridian()) + '\n';
  return out;
}

/// Built-in knot presentations keyed by name.
inline std::optional<std::string_view> builtin_presentation_text(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"unknot", "gens: x\nmeridian: x\n"},
      {"trefoil", "gens: x a\nrel: a x x a = x a x\nmeridian: x\n"},
      {"figure8", "gens: x y\nrel: y x y^-1 x y = x y x^-1 y x\nmeridian: x\n"},
      {"figure8-wirtinger", "gens: a b c d\nrel: a c = b a\nrel: c a = d c\nrel: d b = b c\n"
                            "rel: b d = d a\nmeridian: a\n"},
      {"trefoil-wirtinger",
       "gens: x y z\nrel: x y = y z\nrel: y z = z x\nrel: z x = x y\nmeridian: x\n"},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return std::string_view(it->second);
}

inline std::vector<std::string> builtin_knot_names() {
  return {"figure8", "figure8-wirtinger", "trefoil", "trefoil-wirtinger", "unknot"};
}

inline GroupPresentation builtin_presentation(std::string_view name) {
  auto text = builtin_presentation_text(name);
  if (!text) throw Error("unknown built-in knot `" + std::string(name) + "`");
  return parse_presentation(*text);
}

} // namespace twalex
