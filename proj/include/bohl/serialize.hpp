// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV encodings of the library's value types. The JSON field
// names here are the wire format; schemas/ mirrors them.

#ifndef BOHL_SERIALIZE_HPP
#define BOHL_SERIALIZE_HPP

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bohl/counter.hpp"
#include "bohl/errors.hpp"
#include "bohl/oracle.hpp"
#include "bohl/region.hpp"
#include "bohl/trinomial.hpp"
#include "bohl/verify.hpp"

namespace bohl {

using Json = nlohmann::json;

/// Shortest lossless decimal form of a double, for CSV cells.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Json encode(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json encode(const HarmonicTrinomial& t) {
  return Json{{"a", encode(t.a)},
              {"b", encode(t.b)},
              {"c", encode(t.c)},
              {"n", t.n},
              {"m", t.m}};
}

inline Complex decode_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw Error("complex values must be two-element numeric arrays");
  }
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

inline HarmonicTrinomial decode_instance(const Json& j) {
  for (const char* key : {"a", "b", "c", "n", "m"}) {
    if (!j.contains(key)) {
      throw Error(std::string("instance is missing field \"") + key + "\"");
    }
  }
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer()) {
    throw Error("exponents n and m must be integers");
  }
  return make_trinomial(decode_complex(j["a"]), decode_complex(j["b"]),
                        decode_complex(j["c"]), j["n"].get<int>(),
                        j["m"].get<int>());
}

inline Json encode(const RegionProfile& p) {
  Json j{{"case", to_string(p.case_label)},
         {"c", p.c_break},
         {"a", p.a_break},
         {"r0", p.r0},
         {"omega_min", p.omega_min}};
  if (p.has_gap()) {
    j["b1"] = p.b1;
    j["b2"] = p.b2;
  } else {
    j["b1"] = nullptr;
    j["b2"] = nullptr;
  }
  return j;
}

inline Json encode(const JumpEvent& e) {
  return Json{{"radius", e.radius},
              {"path", to_string(e.path)},
              {"k", e.k},
              {"piece", to_string(e.piece)},
              {"transversal", e.transversal}};
}

inline Json encode(const std::vector<JumpEvent>& events) {
  Json j = Json::array();
  for (const auto& e : events) j.push_back(encode(e));
  return j;
}

inline Json encode(const CountResult& r) {
  Json warnings = Json::array();
  for (const auto& w : r.warnings) {
    warnings.push_back(Json{{"radius", w.event_radius},
                            {"distance", w.distance}});
  }
  Json j{{"count", r.count},
         {"reduced_by", r.reduced_by},
         {"generic", r.generic},
         {"fallback_used", r.fallback_used},
         {"oracle_resolved", r.oracle_resolved},
         {"boundary_ambiguous", r.boundary_ambiguous()},
         {"boundary_warnings", warnings},
         {"jumps_used", encode(r.jumps_used)},
         {"events", encode(r.events)}};
  if (r.dominance_claim) {
    j["paper_eq_1_10_case3"] = *r.dominance_claim;
    j["paper_eq_1_10_case3_mismatch"] = *r.dominance_mismatch;
  }
  return j;
}

inline Json encode(const RootSet& rs) {
  Json j = Json::array();
  for (const auto& root : rs.roots) {
    j.push_back(Json{{"re", root.z.real()},
                     {"im", root.z.imag()},
                     {"residual", root.residual},
                     {"jac_sign", root.jac_sign}});
  }
  return j;
}

inline Json encode(const VerificationReport& rep) {
  return Json{{"formula_total", rep.formula_total},
              {"oracle_total", rep.oracle_total},
              {"totals_match", rep.totals_match},
              {"radii_match", rep.radii_match},
              {"midpoints_match", rep.midpoints_match},
              {"tally_match", rep.tally_match},
              {"preserving", rep.preserving},
              {"reversing", rep.reversing},
              {"generic", rep.generic},
              {"fallback_used", rep.fallback_used},
              {"oracle_resolved", rep.oracle_resolved},
              {"all_pass", rep.all_pass()},
              {"paper_eq_1_10_case3", rep.dominance_claim},
              {"paper_eq_1_10_case3_mismatch", rep.dominance_mismatch},
              {"failures", rep.failures}};
}

/// CSV form of the exact step function: one row per jump radius with the
/// cumulative count after it.
inline std::string profile_to_csv(const std::vector<CountStep>& steps) {
  std::string out = "radius,count_after\n";
  for (const auto& s : steps) {
    out += format_double(s.radius);
    out += ',';
    out += std::to_string(s.count);
    out += '\n';
  }
  return out;
}

/// CSV form of a sampled count table.
inline std::string table_to_csv(
    const std::vector<std::pair<double, long long>>& rows) {
  std::string out = "r,count\n";
  for (const auto& [r, count] : rows) {
    out += format_double(r);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace bohl

#endif  // BOHL_SERIALIZE_HPP
