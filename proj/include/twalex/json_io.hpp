#pragma once

#include "twalex/certify.hpp"
#include "twalex/errors.hpp"
#include "twalex/laurent_poly.hpp"
#include "twalex/perm_rep.hpp"
#include "twalex/smith.hpp"
#include "twalex/twisted.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace twalex {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in int64 and strings otherwise.
inline Json integer_to_json(const Integer &x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return to_string(x);
}

inline Integer integer_from_json(const Json &j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error("expected an integer");
}

/// [[exponent, "coefficient"], ...] in increasing exponent order.
inline Json poly_to_json(const LaurentPoly &f) {
  Json out = Json::array();
  for (const auto &[e, c] : f.terms()) out.push_back(Json::array({e, to_string(c)}));
  return out;
}

inline LaurentPoly poly_from_json(const Json &j) {
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  if (!j.is_array()) throw Error("polynomial must be an array of [exponent, coefficient] pairs");
  std::vector<std::pair<long, Integer>> terms;
  for (const auto &t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw Error("polynomial term must be [exponent, coefficient]");
    terms.emplace_back(t[0].get<long>(), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(terms);
}

inline Json unit_form_to_json(const UnitNormalForm &u) {
  return {{"poly", poly_to_json(u.poly)}, {"shift", u.shift}, {"sign", u.sign}};
}

inline Json group_to_json(const AbelianGroup &g) {
  Json torsion = Json::array();
  for (const auto &d : g.torsion) torsion.push_back(integer_to_json(d));
  return {{"rank", g.rank}, {"torsion", torsion}};
}

inline Json rep_to_json(const GroupPresentation &pres, const PermRep &rep) {
  Json images = Json::object();
  for (std::size_t g = 0; g < rep.images.size(); ++g) images[pres.name(g)] = rep.images[g].images();
  return {{"degree", rep.degree}, {"images", images}};
}

inline PermRep rep_from_json(const Json &j, const std::vector<std::string> &names) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("images"))
    throw Error("representation needs `degree` and `images`");
  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw Error("`degree` must be a positive integer");
  PermRep rep;
  rep.degree = j["degree"].get<std::size_t>();
  const Json &images = j["images"];
  if (!images.is_object()) throw Error("`images` must map generator names to permutations");
  for (const auto &[name, value] : images.items())
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw Error("unknown generator `" + name + "` in representation");
  for (const auto &name : names) {
    if (!images.contains(name)) throw Error("no image for generator `" + name + "`");
    const Json &v = images[name];
    if (v.is_string()) {
      rep.images.push_back(Permutation::from_cycles(v.get<std::string>(), rep.degree));
    } else if (v.is_array()) {
      std::vector<std::size_t> img;
      for (const auto &x : v) {
        if (!x.is_number_unsigned()) throw Error("image of `" + name + "` must list points");
        img.push_back(x.get<std::size_t>());
      }
      if (img.size() != rep.degree)
        throw Error("image of `" + name + "` has " + std::to_string(img.size()) +
                    " points, expected " + std::to_string(rep.degree));
      rep.images.emplace_back(std::move(img));
    } else {
      throw Error("image of `" + name + "` must be an array or cycle string");
    }
  }
  return rep;
}

inline PermRep rep_from_json(const Json &j, const GroupPresentation &pres) {
  return rep_from_json(j, pres.names());
}

inline Json twisted_result_to_json(const TwistedResult &r) {
  Json j = {{"delta_rho", unit_form_to_json(r.delta_rho)},
            {"delta_0", unit_form_to_json(r.delta_0)},
            {"wada_numerator", unit_form_to_json(r.wada_numerator)},
            {"wada_denominator", unit_form_to_json(r.wada_denominator)},
            {"deleted_generator", r.deleted_generator},
            {"is_unit", r.is_unit}};
  j["dropped_relator"] = r.dropped_relator ? Json(*r.dropped_relator) : Json(nullptr);
  if (r.alexander) j["alexander"] = poly_to_json(*r.alexander);
  if (r.divisible_by_alexander) j["divisible_by_alexander"] = *r.divisible_by_alexander;
  return j;
}

inline Json certificate_to_json(const Certificate &c) {
  const GroupPresentation pres = parse_presentation(c.presentation);
  return {{"presentation", c.presentation},
          {"presentation_hash", c.presentation_hash},
          {"r", c.r},
          {"quotient", rep_to_json(GroupPresentation(c.quotient_generators, {}), c.quotient)},
          {"quotient_generators", c.quotient_generators},
          {"least_period", c.least_period},
          {"rep", rep_to_json(pres, c.rep)},
          {"delta_rho", poly_to_json(c.delta_rho)},
          {"alexander", poly_to_json(c.alexander)},
          {"transcript", c.transcript}};
}

inline Certificate certificate_from_json(const Json &j) {
  if (!j.is_object()) throw Error("certificate must be a JSON object");
  for (const char *key : {"presentation", "presentation_hash", "r", "quotient",
                          "quotient_generators", "least_period", "rep", "delta_rho", "alexander"})
    if (!j.contains(key)) throw Error(std::string("certificate is missing `") + key + "`");
  Certificate c;
  c.presentation = j["presentation"].get<std::string>();
  c.presentation_hash = j["presentation_hash"].get<std::string>();
  c.r = j["r"].get<std::size_t>();
  c.quotient_generators = j["quotient_generators"].get<std::vector<std::string>>();
  c.quotient = rep_from_json(j["quotient"], c.quotient_generators);
  c.least_period = j["least_period"].get<std::size_t>();
  c.rep = rep_from_json(j["rep"], parse_presentation(c.presentation));
  c.delta_rho = poly_from_json(j["delta_rho"]);
  c.alexander = poly_from_json(j["alexander"]);
  if (j.contains("transcript")) c.transcript = j["transcript"].get<std::vector<std::string>>();
  return c;
}

inline Json frontier_to_json(const Frontier &f) {
  return {{"r", f.r},
          {"degree", f.degree},
          {"quotients_examined", f.quotients_examined},
          {"extensions_skipped", f.extensions_skipped},
          {"budget_truncated", f.budget_truncated},
          {"out_of_time", f.out_of_time}};
}

} // namespace twalex
