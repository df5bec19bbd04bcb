#pragma once

// JSON and CSV renderings. Field order is fixed (ordered_json) so that output
// is byte-stable across runs.

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "congruence.hpp"
#include "monomial.hpp"
#include "psl2z.hpp"

namespace indrep {

using Json = nlohmann::ordered_json;

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
inline Json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json to_json(const ModularElement& m) {
  return Json::array({Json::array({bigint_json(m.a()), bigint_json(m.b())}),
                      Json::array({bigint_json(m.c()), bigint_json(m.d())})});
}

/// {"perm": [1-based images], "phases": ["k/m", ...]}.
template <std::size_t Dim>
Json to_json(const BasicMonomial<Dim>& m) {
  Json perm = Json::array(), phases = Json::array();
  for (std::size_t j = 0; j < Dim; ++j) {
    perm.push_back(m.perm()[j] + 1);
    phases.push_back(m.phases()[j].to_string());
  }
  return Json{{"perm", perm}, {"phases", phases}};
}

template <std::size_t Dim>
Json dense_json(const BasicMonomial<Dim>& m) {
  Json rows = Json::array();
  auto dense = m.to_dense();
  for (const auto& row : dense) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell ? "e(" + cell->to_string() + ")" : "0");
    rows.push_back(r);
  }
  return rows;
}

inline std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Json to_json(const KernelReport& r) {
  Json j{{"alpha", r.alpha.to_string()},
         {"N", r.N},
         {"index", r.index},
         {"genus", r.genus},
         {"cusps", r.cusps},
         {"level", r.level},
         {"free_generators", r.free_generators},
         {"area_over_pi", rational_string(r.area_over_pi)},
         {"gauss_bonnet_over_pi", rational_string(r.gauss_bonnet_over_pi)}};
  if (r.cross_checks)
    j["cross_checks"] = Json{{"group_order", r.cross_checks->group_order},
                             {"diagonal_order", r.cross_checks->diagonal_order},
                             {"t_order", r.cross_checks->t_order},
                             {"passed", true}};
  return j;
}

inline Json to_json(const CongruenceCertificate& c) {
  Json j{{"alpha", c.alpha.to_string()},
         {"N", c.N},
         {"congruent", c.congruent},
         {"kernel", to_string(c.kernel)},
         {"level", c.checked_level}};
  if (c.image_order) j["image_order"] = *c.image_order;
  if (c.witness)
    j["witness"] = Json{{"matrix", to_json(c.witness->matrix)},
                        {"word", c.witness->word.to_string()},
                        {"image", to_json(c.witness->image)}};
  return j;
}

inline Json to_json(const GammaDInfo& g) {
  return Json{{"d", g.d},
              {"index_in_psl", g.index_in_psl},
              {"genus", g.genus},
              {"cusps", g.cusps},
              {"parabolic_generators", g.parabolic_generators},
              {"area_over_pi", rational_string(g.area_over_pi)},
              {"gauss_bonnet_over_pi", rational_string(g.gauss_bonnet_over_pi)},
              {"zograf_applicable", g.zograf_applicable},
              {"congruence_excluded_by_bound", g.congruence_excluded_by_bound},
              {"known_congruent", g.known_congruent}};
}

inline Json to_json(const AbelianProbeReport& r) {
  Json j{{"k", r.k},
         {"level", r.level},
         {"samples", r.samples},
         {"in_level", r.in_level},
         {"all_in_level", r.all_in_level()}};
  if (r.first_failure)
    j["first_failure"] = Json::array({to_json(r.first_failure->first), to_json(r.first_failure->second)});
  if (r.witness_commutator) {
    j["witness_commutator"] = to_json(*r.witness_commutator);
    j["witness_in_level"] = *r.witness_in_level;
  }
  return j;
}

inline constexpr const char* kScanCsvHeader = "alpha,N,index,genus,cusps,level,free_generators,congruent";

inline std::string scan_csv_row(const ScanRow& row) {
  const auto& r = row.report;
  return r.alpha.to_string() + "," + std::to_string(r.N) + "," + std::to_string(r.index) + "," +
         std::to_string(r.genus) + "," + std::to_string(r.cusps) + "," + std::to_string(r.level) + "," +
         std::to_string(r.free_generators) + "," + (row.certificate.congruent ? "true" : "false");
}

inline Json to_json(const ScanRow& row) {
  const auto& r = row.report;
  return Json{{"alpha", r.alpha.to_string()},
              {"N", r.N},
              {"index", r.index},
              {"genus", r.genus},
              {"cusps", r.cusps},
              {"level", r.level},
              {"free_generators", r.free_generators},
              {"congruent", row.certificate.congruent},
              {"kernel", to_string(row.certificate.kernel)}};
}

}  // namespace indrep
