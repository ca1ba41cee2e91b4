// levicert: command-line driver.
//
// Exit codes: 0 all checks passed, 1 a check failed (artifacts still written),
// 2 invalid input, 3 internal numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "levicert.hpp"

namespace {

using namespace levicert;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

Problem load_problem(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

int run_type(const std::string &path) {
  const auto problem = load_problem(path);
  try {
    std::cout << type_report_json(conjecture_bounds(problem.mixed_term)).dump(2) << "\n";
    return kExitPass;
  } catch (const NotFiniteType &e) {
    std::cout << Json{{"finite_type", false}, {"not_finite_type", {{"coordinate", e.index() + 1}}}}.dump(2)
              << "\n";
    return kExitFail;
  }
}

int run_mult(const std::string &path) {
  const auto problem = load_problem(path);
  try {
    std::cout << multiplicity(problem.mixed_term) << "\n";
    return kExitPass;
  } catch (const NotFiniteType &e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
}

int run_certify(const std::string &path, const std::string &deltas, const std::string &out) {
  auto problem = load_problem(path);
  if (!deltas.empty()) {
    const auto dots = deltas.find("..");
    const auto k1 = dots == std::string::npos ? std::nullopt : parse_int(deltas.substr(0, dots));
    const auto k2 = dots == std::string::npos ? std::nullopt : parse_int(deltas.substr(dots + 2));
    if (!k1 || !k2)
      throw InvalidInput("--deltas expects <k1>..<k2>, e.g. 2..8");
    problem.plan.deltas = delta_decades(static_cast<int>(*k1), static_cast<int>(*k2));
  }
  const auto cert = certify_epsilon(problem.mixed_term, problem.plan);
  if (out.empty()) {
    std::cout << certificate_text(cert);
  } else {
    emit_certificate(cert, out);
    std::cout << (cert.overall ? "PASS" : "FAIL") << " epsilon="
              << (cert.type_report ? to_string(cert.type_report->epsilon) : std::string("undefined"))
              << " certificate=" << out << "\n";
  }
  return cert.overall ? kExitPass : kExitFail;
}

Json transfer_note(const MixedTerm &from, const std::string &to_name,
                   const std::string &from_name) {
  Json note{{"dominant", to_name}, {"dominated", from_name}};
  try {
    note["epsilon"] = to_string(Rational(1, dangelo_type(from)));
    note["note"] = "Levi form of " + to_name + " dominates that of " + from_name +
                   "; a subelliptic estimate of this order certified for " + from_name +
                   " (run certify on it) holds for " + to_name;
  } catch (const NotFiniteType &) {
    note["epsilon"] = nullptr;
    note["note"] = from_name + " is not of finite type; nothing to transfer";
  }
  return note;
}

int run_compare(const std::string &path1, const std::string &path2) {
  const auto p1 = load_problem(path1);
  const auto p2 = load_problem(path2);
  const auto &u1 = p1.mixed_term;
  const auto &u2 = p2.mixed_term;
  if (u1.dimension() != u2.dimension())
    throw InvalidInput("compare needs problems of equal dimension");
  const auto points = sample_points(p1.plan, u1.dimension());
  const auto forward = check_dominance(u1, u2, points);
  const auto backward = check_dominance(u2, u1, points);

  Json j;
  j["forward"] = check_json(forward);
  j["backward"] = check_json(backward);
  Json transfers = Json::array();
  if (forward.pass)
    transfers.push_back(transfer_note(u2, path1, path2));
  if (backward.pass)
    transfers.push_back(transfer_note(u1, path2, path1));
  j["transfers"] = transfers;
  j["overall"] = forward.pass || backward.pass;
  std::cout << j.dump(2) << "\n";
  return (forward.pass || backward.pass) ? kExitPass : kExitFail;
}

int run_scan(const std::string &path, double delta, const std::string &csv) {
  const auto problem = load_problem(path);
  const auto w = weights_for(problem.mixed_term);
  const auto rows = scan_resolve(w, problem.plan, delta);
  std::ofstream out(csv, std::ios::binary);
  if (!out)
    throw InvalidInput("cannot open '" + csv + "' for writing");
  write_scan_csv(out, rows);
  bool ok = true;
  for (const auto &r : rows)
    ok = ok && r.margin >= -kResolveSlack * w.C;
  std::cout << rows.size() << " rows written to " << csv << "\n";
  return ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Levi-form and weight-family certification for rigid monomial domains"};
  app.require_subcommand(1);

  std::string file, file2, deltas, out, csv;
  double delta = 0.0;

  auto *type = app.add_subcommand("type", "print the type report (pure powers, 1-type, multiplicity, bounds) as JSON");
  type->add_option("file", file, "problem file")->required();

  auto *mult = app.add_subcommand("mult", "print the multiplicity m(I)");
  mult->add_option("file", file, "problem file")->required();

  auto *certify = app.add_subcommand("certify", "run the full certification pipeline");
  certify->add_option("file", file, "problem file")->required();
  certify->add_option("--deltas", deltas, "delta decades k1..k2 (delta = 10^-k)");
  certify->add_option("--out", out, "write the JSON certificate here instead of stdout");

  auto *compare = app.add_subcommand("compare", "check Levi dominance in both directions");
  compare->add_option("file1", file, "first problem file")->required();
  compare->add_option("file2", file2, "second problem file")->required();

  auto *scan = app.add_subcommand("scan", "dump resolve-form coefficients along the axes as CSV");
  scan->add_option("file", file, "problem file")->required();
  scan->add_option("--delta", delta, "delta in (0, 1]")->required();
  scan->add_option("--csv", csv, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*type)
      return run_type(file);
    if (*mult)
      return run_mult(file);
    if (*certify)
      return run_certify(file, deltas, out);
    if (*compare)
      return run_compare(file, file2);
    if (*scan)
      return run_scan(file, delta, csv);
  } catch (const InvalidInput &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NotFiniteType &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const EnumerationBudgetExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NumericFailure &e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitInvalid;
}
