#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "../certify/checks.hpp"
#include "../certify/sample_plan.hpp"
#include "../weights/weight_family.hpp"
#include "format.hpp"

namespace levicert {

/// One axis sample of the resolve form for the diagonal model.
struct ScanRow {
  double delta;
  std::size_t coordinate; // 1-based
  double radius;
  double t;         // |z_i|^2 / tau_i^2
  double exact_a;   // exact diagonal entry kappa m^2 |z|^{2m-2}/delta + rho terms
  double literal_a; // lower-bound entry |z|^{2m-2}/delta + rho terms
  double margin;    // exact_a * delta^{2 eps} - C
};

inline std::vector<ScanRow> scan_resolve(const WeightFamily &w, const SamplePlan &plan,
                                         double delta) {
  check_delta(delta);
  const auto model = diagonal_model(w);
  const auto n = w.dimension();
  std::vector<ScanRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const double tau_i = w.tau_at(i, delta);
    for (double r : axis_radii(plan, &w, i, delta)) {
      Point z(n, Complex(0.0, 0.0));
      z[i] = Complex(r, 0.0);
      const double exact = resolve_hessian(model, w, z, delta)(i, i).real();
      const double scale = margin_scale(w, delta);
      rows.push_back({delta, i + 1, r, r * r / (tau_i * tau_i), exact,
                      resolve_literal_margin(w, i, r, delta) / scale, exact * scale - w.C});
    }
  }
  return rows;
}

inline void write_scan_csv(std::ostream &out, const std::vector<ScanRow> &rows) {
  out << "delta,coordinate,radius,t,exact_a,paper_a,margin\n";
  for (const auto &r : rows)
    out << format17(r.delta) << ',' << r.coordinate << ',' << format17(r.radius) << ','
        << format17(r.t) << ',' << format17(r.exact_a) << ',' << format17(r.literal_a) << ','
        << format17(r.margin) << '\n';
}

} // namespace levicert
