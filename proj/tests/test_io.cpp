#include <gtest/gtest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "levicert.hpp"
#include "support.hpp"

using namespace levicert;

namespace {

std::size_t parse_error_line(const std::string &text) {
  try {
    parse_problem(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST(ParseProblem, Examples) {
  const auto p = parse_problem("n = 1\nmon: 1 0 : 4\n");
  EXPECT_EQ(p.mixed_term.dimension(), 1u);
  ASSERT_EQ(p.mixed_term.generators().size(), 1u);
  EXPECT_EQ(p.mixed_term.generators()[0].exponents()[0], 4u);

  const auto q = parse_problem("# comment\nmon: 0.5 -2 : 1 2   # trailing\n\nmon: 1 0 : 3 0\n"
                               "radius = 0.25\ndeltas = 3..5\nseed = 99\nrandom_points = 0\n");
  EXPECT_EQ(q.mixed_term.dimension(), 2u);
  EXPECT_EQ(q.mixed_term.generators()[0].coefficient(), Complex(0.5, -2.0));
  EXPECT_EQ(q.plan.radius, 0.25);
  EXPECT_EQ(q.plan.deltas, (std::vector<double>{1e-3, 1e-4, 1e-5}));
  EXPECT_EQ(q.plan.seed, 99u);
  EXPECT_EQ(q.plan.random_points, 0);

  const auto r = parse_problem("mon: 1 0 : 2\ndeltas = 0.1 0.003\n");
  EXPECT_EQ(r.plan.deltas, (std::vector<double>{0.1, 0.003}));
}

TEST(ParseProblem, Errors) {
  EXPECT_EQ(parse_error_line("n = 1\nmon: 0 0 : 2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 2\nmon: 1 0 : 2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 2\nmon: 1 0 : 0 0\n"), 2u);
  EXPECT_EQ(parse_error_line("mon: 1 0 : 2 0\nmon: 1 0 : 2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 1\n\n\nbogus = 3\n"), 4u);
  EXPECT_EQ(parse_error_line("n = 1\nmon: 1 : 2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 1\nmon: 1 0 : -2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 1\nmon: 1 0 2\n"), 2u);
  EXPECT_EQ(parse_error_line("mon: 1 0 : 2\nradius = 3\n"), 2u);
  EXPECT_EQ(parse_error_line("mon: 1 0 : 2\ndeltas = 5..2\n"), 2u);
  EXPECT_EQ(parse_error_line("n = 1\n"), 1u);
  EXPECT_EQ(parse_error_line("mon: x 0 : 1\n"), 1u);
  EXPECT_EQ(parse_error_line("mon: 1 0 : 1\nn = 2\n"), 2u);
  EXPECT_THROW(parse_problem(""), InvalidInput);

  try {
    parse_problem("n = 1\nmon: 0 0 : 2\n");
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("zero coefficient"), std::string::npos);
  }
}

TEST(Serialization, CanonicalRoundTrip) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testsupport::uniform_int(rng, 1, 4);
    Problem p{testsupport::random_finite_type(rng, n, 9), SamplePlan{}};
    p.plan.radius = testsupport::uniform(rng, 0.01, 1.0);
    p.plan.seed = rng();
    p.plan.radial_points = testsupport::uniform_int(rng, 2, 100);
    p.plan.deltas = {testsupport::uniform(rng, 1e-9, 0.5)};
    const auto text = serialize_problem(p);
    const auto back = parse_problem(text);
    EXPECT_EQ(serialize_problem(back), text);
    ASSERT_EQ(back.mixed_term.generators().size(), p.mixed_term.generators().size());
    for (std::size_t k = 0; k < back.mixed_term.generators().size(); ++k) {
      EXPECT_EQ(back.mixed_term.generators()[k].coefficient(),
                p.mixed_term.generators()[k].coefficient());
      EXPECT_EQ(back.mixed_term.generators()[k].exponents(), p.mixed_term.generators()[k].exponents());
    }
    EXPECT_EQ(back.plan.radius, p.plan.radius);
    EXPECT_EQ(back.plan.seed, p.plan.seed);
    EXPECT_EQ(back.plan.deltas, p.plan.deltas);
    EXPECT_EQ(problem_digest(back), problem_digest(p));
  }
}

TEST(Format, Helpers) {
  EXPECT_EQ(format17(0.1), "0.10000000000000001");
  EXPECT_EQ(parse_double("0.10000000000000001"), std::optional<double>(0.1));
  EXPECT_FALSE(parse_double("1.5x").has_value());
  EXPECT_FALSE(parse_int("12.0").has_value());
  // FNV-1a 64 reference vectors.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(hex64(0xabcull), "0000000000000abc");
  EXPECT_EQ(to_string(Rational(2, 12)), "1/6");
  EXPECT_EQ(parse_rational("3/9"), Rational(1, 3));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
}

TEST(CertificateJson, RoundTripIsExact) {
  for (const auto &u : {testsupport::mixed({{2, 0}, {0, 3}, {1, 1}}), testsupport::mixed({{1, 1}})}) {
    const auto cert = certify_epsilon(u, testsupport::small_plan());
    const auto text = certificate_text(cert);
    const auto back = certificate_from_json(Json::parse(text));
    EXPECT_EQ(back, cert);
    EXPECT_EQ(certificate_text(back), text);
  }
}

TEST(CertificateJson, FileRoundTripAndSchema) {
  const auto cert = certify_epsilon(testsupport::mixed({{4}}), testsupport::small_plan());
  const std::string path = ::testing::TempDir() + "levicert_cert.json";
  emit_certificate(cert, path);
  EXPECT_EQ(read_certificate(path), cert);
  std::remove(path.c_str());

  const auto j = certificate_json(cert);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("certified_epsilon"), "1/8");
  EXPECT_EQ(j.at("type_report").at("epsilon"), "1/8");
  EXPECT_TRUE(j.at("not_finite_type").is_null());
  for (const auto &c : j.at("checks")) {
    EXPECT_TRUE(c.contains("name") && c.contains("pass") && c.contains("margin"));
    EXPECT_TRUE(c.contains("witness_point") && c.contains("delta"));
  }

  auto bad = j;
  bad["schema_version"] = 2;
  EXPECT_THROW(certificate_from_json(bad), InvalidInput);
}

TEST(CertificateJson, WitnessSurvivesRoundTrip) {
  const auto u1 = testsupport::mixed({{2}});
  const auto u2 = testsupport::mixed({{1}});
  const auto rec = check_dominance(u1, u2, testsupport::small_plan());
  const auto back = check_from_json(Json::parse(check_json(rec).dump()));
  ASSERT_TRUE(back.witness.has_value());
  EXPECT_NEAR(dominance_margin(u1, u2, back.witness->z), rec.margin, 1e-12);
}

TEST(Scan, RowsFollowScalingLaw) {
  const auto w = weights_for(testsupport::mixed({{2, 0}, {0, 3}, {1, 1}}));
  const auto plan = testsupport::small_plan();
  const auto a = scan_resolve(w, plan, 1e-3);
  const auto b = scan_resolve(w, plan, 1e-6);
  ASSERT_FALSE(a.empty());
  for (const auto *rows : {&a, &b})
    for (const auto &r : *rows) {
      const auto i = r.coordinate - 1;
      const double scaled = r.exact_a * std::pow(r.delta, 1.0 / w.pure_powers[i]);
      EXPECT_NEAR(scaled, w.scaled_entry(i, std::sqrt(r.t)), 1e-9 * (1.0 + scaled));
      EXPECT_GE(r.exact_a, r.literal_a);
      EXPECT_GE(r.margin, -kResolveSlack * w.C);
    }

  std::ostringstream csv;
  write_scan_csv(csv, a);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "delta,coordinate,radius,t,exact_a,paper_a,margin");
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);)
    ++count;
  EXPECT_EQ(count, a.size());
}
