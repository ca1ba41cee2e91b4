#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "../core/monomial.hpp"
#include "../finite_type.hpp"
#include "../io/problem.hpp"
#include "../rational.hpp"
#include "../weights/weight_family.hpp"
#include "checks.hpp"
#include "sample_plan.hpp"

namespace levicert {

struct CertificateConstants {
  double c = 0.0;
  double d = 0.0;
  double C = 0.0;
  double M = 0.0;
  double C_prime = 0.0;
  double C_dblprime_measured = 0.0;
  double C_dblprime_theory = 0.0;

  bool operator==(const CertificateConstants &) const = default;
};

struct Certificate {
  int schema_version = 1;
  std::string problem_digest;
  std::uint64_t seed = 0;
  std::vector<double> deltas;
  std::optional<TypeReport> type_report;
  /// 1-based coordinate lacking a pure power, when the domain is not of finite type.
  std::optional<std::size_t> not_finite_coordinate;
  std::optional<CertificateConstants> constants;
  std::vector<CheckRecord> checks;
  /// epsilon = 1/T, present only when every check passed.
  std::optional<Rational> certified_epsilon;
  bool overall = false;

  bool operator==(const Certificate &) const = default;
};

/// Weights for the diagonal model under u: m_i from the pure-power generators
/// and Levi scale kappa_i = min(1, sum of |c|^2 over the generators equal to z_i^{m_i}),
/// so that Levi(u) >= Levi(model) holds generator by generator.
inline WeightFamily weights_for(const MixedTerm &u) {
  const auto m = minimal_pure_powers(u);
  std::vector<double> kappa(m.size(), 0.0);
  for (const auto &g : u.generators())
    if (const auto i = g.exponents().pure_power_coordinate(); i && g.exponents()[*i] == m[*i])
      kappa[*i] += g.weight();
  return choose_constants(m, build_cutoff(), u.dimension(), kappa);
}

/// Full pipeline: finite-type decision, type report, weight construction for
/// the diagonal model, resolve inequality on the model, Levi dominance of u
/// over the model, and the weight-family hypotheses on the domain of u.
inline Certificate certify_epsilon(const MixedTerm &u, const SamplePlan &plan) {
  plan.validate();
  Certificate cert;
  cert.problem_digest = problem_digest(Problem{u, plan});
  cert.seed = plan.seed;
  cert.deltas = plan.deltas;

  try {
    cert.type_report = conjecture_bounds(u);
  } catch (const NotFiniteType &e) {
    cert.not_finite_coordinate = e.index() + 1;
    cert.checks.push_back({"finite_type", false, 0.0, std::nullopt, std::nullopt});
    cert.overall = false;
    return cert;
  }

  const auto w = weights_for(u);
  const auto model = diagonal_model(w);

  auto append = [&cert](std::vector<CheckRecord> recs) {
    for (auto &r : recs)
      cert.checks.push_back(std::move(r));
  };
  append(check_resolve(model, w, plan));
  append(check_resolve_literal(w, plan));

  std::vector<Point> dominance_points;
  for (double delta : plan.deltas) {
    auto pts = sample_points(plan, u.dimension(), &w, delta);
    dominance_points.insert(dominance_points.end(), pts.begin(), pts.end());
  }
  cert.checks.push_back(check_dominance(u, model, dominance_points));

  auto family = check_weight_family(u, w, plan);
  append(std::move(family.records));
  cert.checks.push_back(check_fd_spot(u, w, plan));

  cert.constants = CertificateConstants{w.c,
                                        w.d,
                                        w.C,
                                        w.cutoff.derivative_bound(),
                                        uniform_bound(w),
                                        family.strip_constant_measured,
                                        family.strip_constant_theory};
  cert.overall = std::all_of(cert.checks.begin(), cert.checks.end(),
                             [](const CheckRecord &r) { return r.pass; });
  if (cert.overall)
    cert.certified_epsilon = cert.type_report->epsilon;
  return cert;
}

} // namespace levicert
