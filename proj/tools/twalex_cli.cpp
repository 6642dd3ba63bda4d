// Command-line front end: twalex <subcommand> [options].

#include "twalex/json_io.hpp"
#include "twalex/twalex.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace twalex;

namespace {

// Exit codes: 0 success, 1 mathematical negative, 2 input error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
}

struct KnotArgs {
  std::string knot;
  std::string pres;

  void add(CLI::App *cmd) {
    auto *k = cmd->add_option("--knot", knot, "built-in knot (" + names() + ")");
    auto *p = cmd->add_option("--pres", pres, "presentation file");
    k->excludes(p);
  }

  static std::string names() {
    std::string out;
    for (const auto &n : builtin_knot_names()) out += (out.empty() ? "" : ", ") + n;
    return out;
  }

  GroupPresentation presentation() const {
    if (!knot.empty()) {
      if (!builtin_presentation_text(knot))
        throw InputError("unknown knot `" + knot + "`; choose one of " + names());
      return builtin_presentation(knot);
    }
    if (pres.empty()) throw InputError("one of --knot or --pres is required");
    std::vector<ParseWarning> warnings;
    GroupPresentation out = parse_presentation(read_file(pres), &warnings);
    for (const auto &w : warnings)
      std::cerr << pres << ":" << w.line << ": warning: " << w.message << '\n';
    return out;
  }

  KnotGroup knot_group() const { return KnotGroup::from(presentation()); }
};

void print_json(const Json &j) { std::cout << j.dump(2) << '\n'; }

std::string group_line(const AbelianGroup &g) { return to_string(g); }

std::string rep_line(const GroupPresentation &pres, const PermRep &rep) {
  std::string out;
  for (std::size_t g = 0; g < rep.images.size(); ++g) {
    if (!out.empty()) out += "  ";
    out += pres.name(g) + " -> " + rep.images[g].cycles();
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Twisted Alexander polynomials of knot groups"};
  app.require_subcommand(1);
  bool json = false;
  std::size_t threads = 1;

  // alexander
  KnotArgs alex_knot;
  auto *alex = app.add_subcommand("alexander", "classical Alexander polynomial");
  alex_knot.add(alex);
  alex->add_flag("--json", json, "machine-readable output");

  // twisted
  KnotArgs tw_knot;
  std::string tw_rep;
  std::string tw_deleted;
  auto *tw = app.add_subcommand("twisted", "twisted Alexander polynomial of a permutation representation");
  tw_knot.add(tw);
  tw->add_option("--rep", tw_rep, "representation file (JSON)")->required();
  tw->add_option("--delete", tw_deleted, "generator whose column block is removed");
  tw->add_flag("--json", json, "machine-readable output");

  // search-reps
  KnotArgs sr_knot;
  std::size_t sr_degree = 0, sr_branched = 0;
  std::uint64_t sr_budget = SearchOptions{}.node_budget;
  auto *sr = app.add_subcommand("search-reps", "homomorphisms to S_N up to conjugation");
  sr_knot.add(sr);
  sr->add_option("--degree", sr_degree, "N")->required()->check(CLI::PositiveNumber);
  sr->add_option("--branched", sr_branched, "search quotients of the r-fold branched cover group")
      ->check(CLI::PositiveNumber);
  sr->add_option("--budget", sr_budget, "node budget")->check(CLI::PositiveNumber);
  sr->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  sr->add_flag("--json", json, "machine-readable output");

  // cover-homology
  KnotArgs ch_knot;
  std::size_t ch_branched = 0, ch_cyclic = 0;
  std::string ch_rep;
  auto *ch = app.add_subcommand("cover-homology", "first homology of a cyclic, branched or induced cover");
  ch_knot.add(ch);
  auto *ch_b = ch->add_option("--branched", ch_branched, "r-fold branched cover M_r")
                   ->check(CLI::PositiveNumber);
  auto *ch_c = ch->add_option("--cyclic", ch_cyclic, "r-fold cyclic cover X_r")
                   ->check(CLI::PositiveNumber);
  ch_b->excludes(ch_c);
  ch->add_option("--rep", ch_rep, "induce the cover further by a representation (JSON)");
  ch->add_flag("--json", json, "machine-readable output");

  // certify
  KnotArgs ce_knot;
  SearchLimits limits;
  double wall_seconds = 60;
  auto *ce = app.add_subcommand("certify", "search for a representation with non-unit twisted polynomial");
  ce_knot.add(ce);
  ce->add_option("--max-r", limits.max_r, "largest branched cover order")->check(CLI::PositiveNumber);
  ce->add_option("--max-degree", limits.max_degree, "largest quotient degree")
      ->check(CLI::PositiveNumber);
  ce->add_option("--budget", limits.node_budget, "node budget per search")->check(CLI::PositiveNumber);
  ce->add_option("--max-extension", limits.max_extension_degree, "largest extension degree")
      ->check(CLI::PositiveNumber);
  ce->add_option("--wall-clock", wall_seconds, "time limit in seconds")->check(CLI::PositiveNumber);
  ce->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  ce->add_flag("--json", json, "machine-readable output");

  // verify
  std::string vf_file;
  auto *vf = app.add_subcommand("verify", "replay a certificate");
  vf->add_option("certificate", vf_file, "certificate file (JSON)")->required();
  vf->add_flag("--json", json, "machine-readable output");

  // base-change
  std::string bc_poly;
  std::size_t bc_r = 1;
  auto *bc = app.add_subcommand("base-change", "characteristic polynomial over Z[s], s = t^r");
  bc->add_option("--poly", bc_poly, "polynomial in t")->required();
  bc->add_option("--r", bc_r, "r")->required()->check(CLI::PositiveNumber);
  bc->add_flag("--json", json, "machine-readable output");

  // resultant
  std::string rs_f, rs_g;
  std::size_t rs_cyclic = 0;
  auto *rs = app.add_subcommand("resultant", "Res(f, g) or the cyclic resultant Res(f, t^r - 1)");
  rs->add_option("--f,--poly", rs_f, "f")->required();
  auto *rs_go = rs->add_option("--g", rs_g, "g");
  auto *rs_co = rs->add_option("--cyclic", rs_cyclic, "r")->check(CLI::PositiveNumber);
  rs_go->excludes(rs_co);
  rs->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (alex->parsed()) {
      const KnotGroup knot = alex_knot.knot_group();
      const LaurentPoly d = alexander_polynomial(knot);
      if (json)
        print_json({{"alexander", poly_to_json(d)}});
      else
        std::cout << to_string(d) << '\n';
      return 0;
    }

    if (tw->parsed()) {
      const KnotGroup knot = tw_knot.knot_group();
      const PermRep rep = rep_from_json(read_json(tw_rep), knot.presentation);
      TwistedOptions opt;
      if (!tw_deleted.empty()) {
        auto g = knot.presentation.index_of(tw_deleted);
        if (!g) throw InputError("unknown generator `" + tw_deleted + "`");
        opt.deleted_generator = *g;
      }
      const TwistedResult res = twisted_alexander_poly(knot, rep, opt);
      if (json) {
        print_json(twisted_result_to_json(res));
        return 0;
      }
      std::cout << "Delta_rho = " << to_string(res.delta_rho.poly);
      if (*res.divisible_by_alexander && *res.alexander != LaurentPoly(1) && !res.delta_rho.poly.is_zero()) {
        const LaurentPoly q = *exact_divide(res.delta_rho.poly, *res.alexander);
        std::cout << " = (" << to_string(*res.alexander) << ")(" << to_string(q) << ")";
      }
      std::cout << "\nDelta_0 = " << to_string(res.delta_0.poly) << '\n'
                << "Wada invariant = (" << to_string(res.wada_numerator.poly) << ") / ("
                << to_string(res.wada_denominator.poly) << "), generator "
                << knot.presentation.name(res.deleted_generator) << " deleted\n"
                << "unit: " << (res.is_unit ? "yes" : "no") << '\n'
                << "divisible by Alexander polynomial: "
                << (*res.divisible_by_alexander ? "yes" : "no") << '\n';
      return 0;
    }

    if (sr->parsed()) {
      const KnotGroup knot = sr_knot.knot_group();
      GroupPresentation pres = knot.presentation;
      if (sr_branched > 0) pres = branched_cover_presentation(knot, sr_branched).presentation;
      SearchResult found;
      bool truncated = false;
      try {
        found = search_homs(pres, sr_degree, {sr_budget, static_cast<unsigned>(threads)});
      } catch (const BudgetExhausted &e) {
        found = e.partial();
        truncated = true;
      }
      if (json) {
        Json reps = Json::array();
        for (const auto &r : found.reps) reps.push_back(rep_to_json(pres, r));
        print_json({{"degree", sr_degree},
                    {"representations", reps},
                    {"nodes", found.nodes},
                    {"truncated", truncated},
                    {"deduplicated", found.deduplicated}});
      } else {
        for (const auto &r : found.reps) std::cout << rep_line(pres, r) << '\n';
        std::cout << found.reps.size() << " representation(s)"
                  << (found.deduplicated ? " up to conjugation" : "")
                  << (truncated ? ", truncated at the node budget" : "") << '\n';
      }
      return truncated ? 1 : 0;
    }

    if (ch->parsed()) {
      const KnotGroup knot = ch_knot.knot_group();
      if (ch_branched == 0 && ch_cyclic == 0)
        throw InputError("one of --branched or --cyclic is required");
      Json out;
      std::string line;
      if (ch_rep.empty()) {
        const CoverPresentation cover = ch_branched > 0
                                            ? branched_cover_presentation(knot, ch_branched)
                                            : cyclic_cover_presentation(knot, ch_cyclic);
        const AbelianGroup h = abelianization_group(cover.presentation);
        out = {{"homology", group_to_json(h)}};
        line = group_line(h);
      } else {
        const PermRep rep = rep_from_json(read_json(ch_rep), knot.presentation);
        if (ch_cyclic > 0) {
          const InducedCoverHomology h = induced_cover_homology(knot, rep, ch_cyclic);
          Json comps = Json::array();
          for (const auto &c : h.components) comps.push_back(group_to_json(c));
          out = {{"homology", group_to_json(h.total)},
                 {"components", comps},
                 {"module_quotient", group_to_json(h.module_quotient)}};
          line = group_line(h.total) + "\nH_1 of the infinite induced cover mod t^" +
                 std::to_string(ch_cyclic) + " - 1: " + group_line(h.module_quotient);
        } else {
          const CoverPresentation branched = branched_cover_presentation(knot, ch_branched);
          const CosetAction action = branched_induced_action(branched, rep);
          const CoverPresentation cover = reidemeister_schreier(branched.presentation, action, 0);
          const AbelianGroup h = abelianization_group(cover.presentation);
          out = {{"homology", group_to_json(h)}, {"connected", !cover.restricted}};
          line = group_line(h);
          if (cover.restricted) line += " (component of point 0)";
        }
      }
      if (json)
        print_json(out);
      else
        std::cout << line << '\n';
      return 0;
    }

    if (ce->parsed()) {
      const KnotGroup knot = ce_knot.knot_group();
      limits.threads = threads;
      limits.wall_clock = std::chrono::milliseconds(static_cast<long long>(wall_seconds * 1000));
      const CertifyOutcome outcome = certify_nontrivial(knot, limits);
      if (const auto *cert = std::get_if<Certificate>(&outcome)) {
        if (json) {
          print_json(certificate_to_json(*cert));
        } else {
          std::cout << "certificate: r = " << cert->r << ", quotient degree "
                    << cert->quotient.degree << ", least period " << cert->least_period
                    << ", extension degree " << cert->rep.degree << '\n'
                    << "rep: " << rep_line(knot.presentation, cert->rep) << '\n'
                    << "Delta_rho = " << to_string(cert->delta_rho) << '\n';
          for (const auto &l : cert->transcript) std::cout << "  " << l << '\n';
        }
        return 0;
      }
      const Frontier &f = std::get<Exhausted>(outcome).frontier;
      if (json) {
        print_json({{"exhausted", true}, {"frontier", frontier_to_json(f)}});
      } else {
        std::cout << "exhausted: no non-unit twisted polynomial up to r = " << f.r
                  << ", degree " << f.degree << " (" << f.quotients_examined
                  << " nontrivial quotient(s) examined, " << f.extensions_skipped
                  << " extension(s) skipped" << (f.budget_truncated ? ", node budget hit" : "")
                  << (f.out_of_time ? ", out of time" : "") << ")\n";
      }
      return 1;
    }

    if (vf->parsed()) {
      Certificate cert;
      try {
        cert = certificate_from_json(read_json(vf_file));
      } catch (const Json::exception &e) {
        throw InputError(vf_file + ": " + e.what());
      }
      const VerifyReport report = verify_certificate(cert);
      if (json) {
        print_json({{"ok", report.ok}, {"transcript", report.transcript}, {"failures", report.failures}});
      } else {
        for (const auto &l : report.transcript) std::cout << l << '\n';
        for (const auto &l : report.failures) std::cout << "FAILED: " << l << '\n';
        std::cout << (report.ok ? "certificate verified" : "certificate rejected") << '\n';
      }
      return report.ok ? 0 : 1;
    }

    if (bc->parsed()) {
      const LaurentPoly f = parse_laurent(bc_poly);
      const LaurentPoly s = base_change(f, bc_r);
      if (json)
        print_json({{"base_change", poly_to_json(s)}});
      else
        std::cout << to_string(s, "s") << '\n';
      return 0;
    }

    if (rs->parsed()) {
      const LaurentPoly f = parse_laurent(rs_f);
      Integer value;
      if (rs_cyclic > 0) {
        value = cyclic_resultant(f, rs_cyclic);
      } else {
        if (rs_g.empty()) throw InputError("one of --g or --cyclic is required");
        value = resultant(f, parse_laurent(rs_g));
      }
      if (json)
        print_json({{"resultant", integer_to_json(value)}});
      else
        std::cout << to_string(value) << '\n';
      return 0;
    }
  } catch (const std::exception &e) {
    // Bad files, malformed presentations or representations, and
    // presentations that are not knot groups all land here.
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
