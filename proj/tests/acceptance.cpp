// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levicert.hpp"
#include "support.hpp"

using namespace levicert;
using testsupport::mixed;

namespace {

struct CatalogEntry {
  std::string label;
  MixedTerm u;
  Rational epsilon;
};

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> c;
  for (std::uint32_t m = 1; m <= 4; ++m)
    c.push_back({"|z1^" + std::to_string(m) + "|^2", mixed({{m}}), Rational(1, 2 * m)});
  c.push_back({"{z1^2, z2^3, z1 z2}", mixed({{2, 0}, {0, 3}, {1, 1}}), Rational(1, 6)});
  c.push_back({"{z1^3, z2^3, z1 z2}", mixed({{3, 0}, {0, 3}, {1, 1}}), Rational(1, 6)});
  return c;
}

/// Hand-picked families plus seeded random ones; n <= 3, exponents <= 6.
std::vector<MixedTerm> type_suite() {
  std::vector<MixedTerm> s{
      mixed({{1}}),
      mixed({{6}}),
      mixed({{2, 0}, {0, 5}, {1, 1}}),
      mixed({{6, 0}, {0, 1}}),
      mixed({{3, 0}, {0, 3}, {2, 1}, {1, 2}}),
      mixed({{4, 0}, {0, 6}, {2, 2}, {1, 4}, {3, 1}}),
      mixed({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}, {1, 1, 1}}),
      mixed({{6, 0, 0}, {0, 6, 0}, {0, 0, 6}}),
      mixed({{1, 0, 0}, {0, 5, 0}, {0, 0, 2}, {0, 2, 1}}),
      mixed({{5, 0, 0}, {0, 2, 0}, {0, 0, 3}, {2, 1, 0}, {1, 0, 1}, {0, 1, 2}}),
  };
  std::mt19937_64 rng(0xacce97);
  while (s.size() < 30) {
    const std::size_t n = testsupport::uniform_int(rng, 1, 3);
    s.push_back(testsupport::random_finite_type(rng, n, 6, true));
  }
  return s;
}

std::int64_t brute_multiplicity(const MixedTerm &u) {
  std::uint32_t side = 1;
  for (const auto &g : u.generators())
    for (auto e : g.exponents().entries())
      side = std::max(side, e + 1);
  const auto n = u.dimension();
  std::vector<std::uint32_t> beta(n, 0);
  std::int64_t count = 0;
  for (;;) {
    bool in_ideal = false;
    for (const auto &g : u.generators()) {
      bool divides = true;
      for (std::size_t i = 0; i < n; ++i)
        divides = divides && g.exponents()[i] <= beta[i];
      in_ideal = in_ideal || divides;
    }
    count += in_ideal ? 0 : 1;
    std::size_t i = 0;
    while (i < n && ++beta[i] == side)
      beta[i++] = 0;
    if (i == n)
      return count;
  }
}

Problem load(const std::string &name) {
  std::ifstream in(std::string(LEVICERT_PROBLEMS_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

int failures = 0;

void report(int id, const std::string &title, bool pass, const std::string &detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

template <class F> void guarded(int id, const std::string &title, F &&body) {
  try {
    body();
  } catch (const std::exception &e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

} // namespace

int main() {
  const SamplePlan plan;
  std::vector<Certificate> certs;

  guarded(1, "sharp-epsilon catalog", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto &e : catalog()) {
      certs.push_back(certify_epsilon(e.u, plan));
      const auto &c = certs.back();
      const bool hit = c.overall && c.certified_epsilon && *c.certified_epsilon == e.epsilon;
      ok = ok && hit;
      detail += e.label + " -> " + (c.certified_epsilon ? to_string(*c.certified_epsilon) : "none") +
                (hit ? "" : " (expected " + to_string(e.epsilon) + ")") + "; ";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < 60.0;
    report(1, "sharp-epsilon catalog", ok, detail + "runtime " + std::to_string(secs) + " s");
  });

  const auto suite = type_suite();

  guarded(2, "type-oracle equivalence", [&] {
    int agree = 0;
    std::string bad;
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const auto &u = suite[k];
      const auto m = minimal_pure_powers(u);
      const auto A = static_cast<std::uint32_t>(u.dimension() * *std::max_element(m.begin(), m.end()));
      if (probe_type(u, A) == Rational(dangelo_type(u)))
        ++agree;
      else
        bad += " #" + std::to_string(k);
    }
    report(2, "type-oracle equivalence", agree == static_cast<int>(suite.size()) && agree >= 20,
           std::to_string(agree) + "/" + std::to_string(suite.size()) + " families agree" + bad);
  });

  guarded(3, "multiplicity staircase and sandwich", [&] {
    int agree = 0;
    bool sandwich = true;
    for (const auto &u : suite) {
      const auto r = conjecture_bounds(u);
      agree += r.multiplicity == brute_multiplicity(u) ? 1 : 0;
      sandwich = sandwich && r.lower_bound <= r.epsilon && r.epsilon <= r.upper_bound;
    }
    report(3, "multiplicity staircase and sandwich",
           agree == static_cast<int>(suite.size()) && sandwich,
           std::to_string(agree) + "/" + std::to_string(suite.size()) +
               " multiplicities match brute enumeration; sandwich " + (sandwich ? "holds" : "broken"));
  });

  guarded(4, "resolve inequality", [&] {
    bool ok = true;
    double worst_ratio = 1e300, worst_spread = 0.0;
    for (const auto &e : catalog()) {
      const auto w = weights_for(e.u);
      for (const auto &r : check_resolve(diagonal_model(w), w, plan)) {
        ok = ok && r.pass;
        if (r.name == "resolve")
          worst_ratio = std::min(worst_ratio, r.margin / w.C);
        else
          worst_spread = std::max(worst_spread, r.margin);
      }
    }
    report(4, "resolve inequality", ok,
           "min margin / min(1,c,d) = " + format17(worst_ratio) +
               ", max delta spread = " + format17(worst_spread));
  });

  guarded(5, "weight-family checks", [&] {
    bool ok = certs.size() == catalog().size();
    double worst_psh = 1e300, max_flat = 0.0, worst_spread = 0.0, min_strip = 1e300;
    for (const auto &c : certs) {
      for (const auto &r : c.checks) {
        if (r.name == "psh") {
          ok = ok && r.pass;
          worst_psh = std::min(worst_psh, r.margin);
        } else if (r.name == "flatness") {
          ok = ok && r.margin == 0.0;
          max_flat = std::max(max_flat, r.margin);
        } else if (r.name == "strip") {
          ok = ok && r.margin > 0.0;
          min_strip = std::min(min_strip, r.margin);
        } else if (r.name == "strip_stability") {
          ok = ok && r.margin < 0.05;
          worst_spread = std::max(worst_spread, r.margin);
        }
      }
    }
    report(5, "weight-family checks", ok,
           "worst psh min-eig/(1+trace) = " + format17(worst_psh) + ", max |flat| = " +
               format17(max_flat) + ", min C'' = " + format17(min_strip) +
               ", max C'' spread = " + format17(worst_spread));
  });

  guarded(6, "finite-difference oracle", [&] {
    constexpr int kPoints = 100;
    constexpr double delta = 1e-2;
    double worst = 0.0;
    std::string where;
    for (const auto &e : catalog()) {
      const auto &u = e.u;
      const auto n = u.dimension();
      const auto w = weights_for(u);
      double tau_min = 1.0;
      for (std::size_t i = 0; i < n; ++i)
        tau_min = std::min(tau_min, w.tau_at(i, delta));
      const double h = 1e-3 * std::min(delta, tau_min);
      std::mt19937_64 rng(0xfd0 + n);
      const AmbientField fu = [&](const AmbientPoint &q) { return eval_mixed(u, q.z); };
      const AmbientField frho = [&](const AmbientPoint &q) { return rho_delta(w, q.z, delta); };
      const AmbientField flt = [&](const AmbientPoint &q) { return lambda_tilde(u, w, q, delta); };
      const AmbientField flam = [&](const AmbientPoint &q) { return lambda_value(u, w, q, delta); };
      auto err = [](const HermitianForm &a, const HermitianForm &b) {
        return (a - b).max_norm() / (1.0 + a.max_norm());
      };
      for (int k = 0; k < kPoints; ++k) {
        Point z(n);
        for (std::size_t i = 0; i < n; ++i)
          z[i] = std::polar(std::min(plan.radius, testsupport::uniform(rng, 0.0, 1.5) * w.tau_at(i, delta)),
                            testsupport::uniform(rng, 0.0, 2.0 * std::numbers::pi));
        const auto p = point_at_level(u, z, testsupport::uniform(rng, -3.5, 0.95) * delta);
        const AmbientPoint wide{testsupport::random_point(rng, n, plan.radius), {0.0, 0.0}};
        const double errs[] = {
            err(levi_form(u, wide.z), leading_block(fd_hessian(fu, wide, 1e-4, true), n)),
            err(rho_hessian(w, p.z, delta), leading_block(fd_hessian(frho, p, h, true), n)),
            err(lambda_tilde_hessian(u, w, p, delta), fd_hessian(flt, p, h, true)),
            err(lambda_hessian(u, w, p, delta), fd_hessian(flam, p, h, true))};
        for (int a = 0; a < 4; ++a)
          if (errs[a] > worst) {
            worst = errs[a];
            where = e.label + " assembly " + std::to_string(a);
          }
      }
    }
    report(6, "finite-difference oracle", worst <= 1e-5,
           "worst relative error " + format17(worst) + (where.empty() ? "" : " at " + where));
  });

  guarded(7, "monotonicity transfer", [&] {
    const auto full = load("dominant_pair_full.txt");
    const auto diag = load("diagonal_4_6.txt");
    const auto &u = full.mixed_term;
    const auto &v = diag.mixed_term;
    bool pointwise = true;
    double worst = 1e300;
    for (double delta : full.plan.deltas) {
      const auto w = weights_for(u);
      for (const auto &z : sample_points(full.plan, u.dimension(), &w, delta)) {
        const auto diff = levi_form(u, z) - levi_form(v, z);
        const double e = hermitian_min_eigenvalue(diff);
        pointwise = pointwise && e >= -1e-9 * (1.0 + std::abs(diff.trace()));
        worst = std::min(worst, e);
      }
    }
    const auto record = check_dominance(u, v, full.plan);
    const auto cu = certify_epsilon(u, full.plan);
    const auto cv = certify_epsilon(v, diag.plan);
    const bool carries = cu.overall && cv.overall && cu.certified_epsilon && cv.certified_epsilon &&
                         *cu.certified_epsilon == *cv.certified_epsilon;
    report(7, "monotonicity transfer", pointwise && record.pass && carries,
           "min-eig(Levi(u) - Levi(model)) = " + format17(worst) + ", certificate epsilon " +
               (cu.certified_epsilon ? to_string(*cu.certified_epsilon) : "none") + " vs model " +
               (cv.certified_epsilon ? to_string(*cv.certified_epsilon) : "none"));
  });

  guarded(8, "determinism", [&] {
    const auto p = load("mixed_2_3.txt");
    ::setenv("LEVICERT_THREADS", "1", 1);
    const auto a = certificate_text(certify_epsilon(p.mixed_term, p.plan));
    ::setenv("LEVICERT_THREADS", "4", 1);
    const auto b = certificate_text(certify_epsilon(p.mixed_term, p.plan));
    ::unsetenv("LEVICERT_THREADS");
    const auto c = certificate_text(certify_epsilon(p.mixed_term, p.plan));
    report(8, "determinism", a == b && b == c,
           std::to_string(a.size()) + " bytes, " + hex64(fnv1a64(a)) +
               (a == b && b == c ? " identical across 3 runs" : " runs differ"));
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
