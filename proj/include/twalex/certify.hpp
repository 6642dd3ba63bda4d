#pragma once

#include "twalex/covers.hpp"
#include "twalex/errors.hpp"
#include "twalex/periodic.hpp"
#include "twalex/presentation.hpp"
#include "twalex/twisted.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace twalex {

struct SearchLimits {
  std::size_t max_r = 3;
  std::size_t max_degree = 6;
  std::uint64_t node_budget = SearchOptions{}.node_budget; // per search_homs call
  std::chrono::milliseconds wall_clock{60'000};
  /// Extensions with more points than this are skipped.
  std::size_t max_extension_degree = 720;
  std::size_t threads = 1;
};

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Certificate {
  std::string presentation; // canonical text
  std::string presentation_hash;
  std::size_t r = 0;
  std::vector<std::string> quotient_generators; // branched cover generator names
  PermRep quotient;                             // p on those generators, degree m
  std::size_t least_period = 0;
  PermRep rep; // P on the knot generators
  LaurentPoly delta_rho;
  LaurentPoly alexander;
  std::vector<std::string> transcript;
};

/// How far the search got before giving up.
struct Frontier {
  std::size_t r = 0;
  std::size_t degree = 0;
  std::size_t quotients_examined = 0;
  std::size_t extensions_skipped = 0;
  bool budget_truncated = false;
  bool out_of_time = false;
};

struct Exhausted {
  Frontier frontier;
};

using CertifyOutcome = std::variant<Certificate, Exhausted>;

namespace detail {

inline std::string unit_verdict(const LaurentPoly &f) {
  return to_string(f) + (f == LaurentPoly(1) ? " (a unit)" : " (not a unit)");
}

/// Shared by certify and verify: rebuilds P from the quotient, recomputes
/// everything and appends the checks to `log`.
inline std::pair<Extension, TwistedResult> replay(const KnotGroup &knot, std::size_t r,
                                                  const PermRep &quotient,
                                                  std::size_t extension_cap,
                                                  std::vector<std::string> &log) {
  const PeriodicRep p = make_periodic_rep(knot, r, quotient);
  log.push_back("branched cover r=" + std::to_string(r) + ": " +
                std::to_string(p.cover.presentation.generator_count()) + " generators, " +
                std::to_string(p.cover.presentation.relator_count()) + " relators");
  log.push_back("quotient of degree " + std::to_string(quotient.degree) + " satisfies all " +
                std::to_string(p.cover.presentation.relator_count()) + " relators");
  const Extension ext = extend_periodic(p, extension_cap);
  if (ext.period == 1) throw Error("nontrivial quotient with period 1");
  log.push_back("least period " + std::to_string(ext.period));
  log.push_back("extension degree " + std::to_string(ext.rep.degree) + ", |p(pi')| = " +
                std::to_string(ext.periodic_image_order) + ", |P(pi')| = " +
                std::to_string(ext.kernel_order) + ", |P(pi)| = " + std::to_string(ext.image_order));
  log.push_back("extension satisfies all " + std::to_string(knot.presentation.relator_count()) +
                " knot relators");
  TwistedResult res = twisted_alexander_poly(knot, ext.rep);
  log.push_back("Delta_rho = " + unit_verdict(res.delta_rho.poly));
  log.push_back("Alexander polynomial " + to_string(*res.alexander) +
                (*res.divisible_by_alexander ? " divides" : " does not divide") + " Delta_rho");
  return {ext, res};
}

} // namespace detail

/// Searches r = 2..max_r, degrees 2..max_degree, quotients in lexicographic
/// order, for a quotient of pi_1 M_r whose extension has a non-unit twisted
/// Alexander polynomial.
inline CertifyOutcome certify_nontrivial(const KnotGroup &knot, const SearchLimits &limits = {}) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + limits.wall_clock;
  const std::string text = to_text(knot.presentation);
  Frontier frontier;
  for (std::size_t r = 2; r <= limits.max_r; ++r) {
    const CoverPresentation cover = branched_cover_presentation(knot, r);
    for (std::size_t m = 2; m <= limits.max_degree; ++m) {
      frontier.r = r;
      frontier.degree = m;
      SearchResult found;
      try {
        found = search_homs(cover.presentation, m,
                            {limits.node_budget, static_cast<unsigned>(limits.threads)});
      } catch (const BudgetExhausted &e) {
        found = e.partial();
        frontier.budget_truncated = true;
      }
      for (const PermRep &q : found.reps) {
        if (clock::now() > deadline) {
          frontier.out_of_time = true;
          return Exhausted{frontier};
        }
        if (q.is_trivial()) continue;
        ++frontier.quotients_examined;
        std::vector<std::string> log{"presentation hash " + fnv1a64(text)};
        std::optional<std::pair<Extension, TwistedResult>> run;
        try {
          const std::size_t cap = limits.max_extension_degree * r;
          run = detail::replay(knot, r, q, cap, log);
        } catch (const CapExceeded &) {
          ++frontier.extensions_skipped;
          continue;
        }
        if (run->second.is_unit) continue;
        Certificate cert;
        cert.presentation = text;
        cert.presentation_hash = fnv1a64(text);
        cert.r = r;
        cert.quotient_generators = cover.presentation.names();
        cert.quotient = q;
        cert.least_period = run->first.period;
        cert.rep = run->first.rep;
        cert.delta_rho = run->second.delta_rho.poly;
        cert.alexander = *run->second.alexander;
        cert.transcript = std::move(log);
        return cert;
      }
      if (clock::now() > deadline) {
        frontier.out_of_time = true;
        return Exhausted{frontier};
      }
    }
  }
  return Exhausted{frontier};
}

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> transcript;
  std::vector<std::string> failures;
};

/// Replays a certificate from its data alone.
inline VerifyReport verify_certificate(const Certificate &cert) {
  VerifyReport rep;
  auto check = [&](bool cond, const std::string &what) {
    if (!cond) rep.failures.push_back(what);
  };
  try {
    const std::string hash = fnv1a64(cert.presentation);
    rep.transcript.push_back("presentation hash " + hash);
    check(hash == cert.presentation_hash, "presentation hash mismatch");
    const KnotGroup knot = KnotGroup::from(parse_presentation(cert.presentation));
    const CoverPresentation cover = branched_cover_presentation(knot, cert.r);
    check(cover.presentation.names() == cert.quotient_generators,
          "branched cover generator names differ");
    check(!cert.quotient.is_trivial(), "quotient is trivial");
    const std::size_t cap = std::max<std::size_t>(cert.rep.degree, 1) * cert.r;
    auto [ext, res] = detail::replay(knot, cert.r, cert.quotient, cap, rep.transcript);
    check(ext.period == cert.least_period, "least period differs");
    check(ext.rep == cert.rep, "extension differs from the recorded representation");
    check(res.delta_rho.poly == unit_normalized(cert.delta_rho), "Delta_rho differs");
    check(!res.is_unit, "Delta_rho is a unit");
    check(*res.alexander == unit_normalized(cert.alexander), "Alexander polynomial differs");
    check(*res.divisible_by_alexander, "Alexander polynomial does not divide Delta_rho");
  } catch (const std::exception &e) {
    rep.failures.push_back(e.what());
  }
  rep.ok = rep.failures.empty();
  return rep;
}

} // namespace twalex
