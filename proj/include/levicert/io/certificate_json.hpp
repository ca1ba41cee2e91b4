#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "../certify/certificate.hpp"
#include "../errors.hpp"
#include "../rational.hpp"
#include "format.hpp"

namespace levicert {

using Json = nlohmann::ordered_json;

// Floating-point values are written as decimal strings with 17 significant
// digits and rationals as "p/q", so nothing is lost to a JSON reader's
// number handling.

namespace detail {

inline Json complex_json(const Complex &c) { return Json::array({format17(c.real()), format17(c.imag())}); }

inline double number_from(const Json &j) {
  const auto v = parse_double(j.get<std::string>());
  if (!v)
    throw InvalidInput("malformed number in certificate: " + j.dump());
  return *v;
}

inline Complex complex_from(const Json &j) { return {number_from(j.at(0)), number_from(j.at(1))}; }

} // namespace detail

inline Json type_report_json(const TypeReport &r) {
  Json j;
  j["pure_powers"] = r.pure_powers;
  j["one_type"] = r.one_type;
  j["multiplicity"] = r.multiplicity;
  j["epsilon"] = to_string(r.epsilon);
  j["bounds"] = Json{{"lower", to_string(r.lower_bound)}, {"upper", to_string(r.upper_bound)}};
  return j;
}

inline TypeReport type_report_from_json(const Json &j) {
  TypeReport r;
  r.pure_powers = j.at("pure_powers").get<std::vector<std::uint32_t>>();
  r.one_type = j.at("one_type").get<std::int64_t>();
  r.multiplicity = j.at("multiplicity").get<std::int64_t>();
  r.epsilon = parse_rational(j.at("epsilon").get<std::string>());
  r.lower_bound = parse_rational(j.at("bounds").at("lower").get<std::string>());
  r.upper_bound = parse_rational(j.at("bounds").at("upper").get<std::string>());
  return r;
}

inline Json point_json(const AmbientPoint &p) {
  Json z = Json::array();
  for (const auto &c : p.z)
    z.push_back(detail::complex_json(c));
  return Json{{"z", z}, {"z_last", detail::complex_json(p.z_last)}};
}

inline AmbientPoint point_from_json(const Json &j) {
  AmbientPoint p;
  for (const auto &c : j.at("z"))
    p.z.push_back(detail::complex_from(c));
  p.z_last = detail::complex_from(j.at("z_last"));
  return p;
}

inline Json check_json(const CheckRecord &r) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["margin"] = format17(r.margin);
  j["witness_point"] = r.witness ? point_json(*r.witness) : Json(nullptr);
  j["delta"] = r.delta ? Json(format17(*r.delta)) : Json(nullptr);
  return j;
}

inline CheckRecord check_from_json(const Json &j) {
  CheckRecord r;
  r.name = j.at("name").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.margin = detail::number_from(j.at("margin"));
  if (!j.at("witness_point").is_null())
    r.witness = point_from_json(j.at("witness_point"));
  if (!j.at("delta").is_null())
    r.delta = detail::number_from(j.at("delta"));
  return r;
}

inline Json certificate_json(const Certificate &c) {
  Json j;
  j["schema_version"] = c.schema_version;
  j["problem_digest"] = c.problem_digest;
  j["seed"] = std::to_string(c.seed);
  Json deltas = Json::array();
  for (double d : c.deltas)
    deltas.push_back(format17(d));
  j["deltas"] = deltas;
  j["type_report"] = c.type_report ? type_report_json(*c.type_report) : Json(nullptr);
  j["not_finite_type"] = c.not_finite_coordinate
                             ? Json{{"coordinate", *c.not_finite_coordinate}}
                             : Json(nullptr);
  if (c.constants) {
    const auto &k = *c.constants;
    j["constants"] = Json{{"c", format17(k.c)},
                          {"d", format17(k.d)},
                          {"C", format17(k.C)},
                          {"M", format17(k.M)},
                          {"C_prime", format17(k.C_prime)},
                          {"C_dblprime_measured", format17(k.C_dblprime_measured)},
                          {"C_dblprime_theory", format17(k.C_dblprime_theory)}};
  } else {
    j["constants"] = nullptr;
  }
  Json checks = Json::array();
  for (const auto &r : c.checks)
    checks.push_back(check_json(r));
  j["checks"] = checks;
  j["certified_epsilon"] = c.certified_epsilon ? Json(to_string(*c.certified_epsilon)) : Json(nullptr);
  j["overall"] = c.overall;
  return j;
}

inline Certificate certificate_from_json(const Json &j) {
  Certificate c;
  c.schema_version = j.at("schema_version").get<int>();
  if (c.schema_version != 1)
    throw InvalidInput("unsupported certificate schema version " + std::to_string(c.schema_version));
  c.problem_digest = j.at("problem_digest").get<std::string>();
  const auto seed = parse_uint64(j.at("seed").get<std::string>());
  if (!seed)
    throw InvalidInput("malformed seed in certificate");
  c.seed = *seed;
  for (const auto &d : j.at("deltas"))
    c.deltas.push_back(detail::number_from(d));
  if (!j.at("type_report").is_null())
    c.type_report = type_report_from_json(j.at("type_report"));
  if (!j.at("not_finite_type").is_null())
    c.not_finite_coordinate = j.at("not_finite_type").at("coordinate").get<std::size_t>();
  if (const auto &k = j.at("constants"); !k.is_null())
    c.constants = CertificateConstants{detail::number_from(k.at("c")),
                                       detail::number_from(k.at("d")),
                                       detail::number_from(k.at("C")),
                                       detail::number_from(k.at("M")),
                                       detail::number_from(k.at("C_prime")),
                                       detail::number_from(k.at("C_dblprime_measured")),
                                       detail::number_from(k.at("C_dblprime_theory"))};
  for (const auto &r : j.at("checks"))
    c.checks.push_back(check_from_json(r));
  if (!j.at("certified_epsilon").is_null())
    c.certified_epsilon = parse_rational(j.at("certified_epsilon").get<std::string>());
  c.overall = j.at("overall").get<bool>();
  return c;
}

inline std::string certificate_text(const Certificate &c) { return certificate_json(c).dump(2) + "\n"; }

inline void emit_certificate(const Certificate &c, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << certificate_text(c);
  if (!out)
    throw std::runtime_error("failed writing '" + path + "'");
}

inline Certificate read_certificate(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return certificate_from_json(Json::parse(in));
}

} // namespace levicert
