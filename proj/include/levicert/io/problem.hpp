#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../certify/sample_plan.hpp"
#include "../core/monomial.hpp"
#include "../errors.hpp"
#include "format.hpp"

namespace levicert {

struct Problem {
  MixedTerm mixed_term;
  SamplePlan plan;
};

// Problem file grammar (one statement per line, '#' starts a comment):
//
//   n = <dimension>                       optional; inferred from the first monomial
//   mon: <re> <im> : <e_1> ... <e_n>      generator (re + i im) z_1^e_1 ... z_n^e_n
//   radius = <R>                          plan overrides, all optional
//   radial_points = <int>
//   phase_points = <int>
//   random_points = <int>
//   deltas = <k1>..<k2>  |  deltas = <d_1> <d_2> ...
//   seed = <uint64>

namespace detail {

inline std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

} // namespace detail

inline Problem parse_problem(const std::string &text) {
  std::optional<std::size_t> n;
  std::vector<Monomial> gens;
  SamplePlan plan;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::size_t first_mon_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const auto line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty())
      continue;

    if (line.rfind("mon:", 0) == 0) {
      const auto body = line.substr(4);
      const auto colon = body.find(':');
      if (colon == std::string::npos)
        throw ParseError(lineno, "expected 'mon: <re> <im> : <exponents>'");
      const auto coef = detail::split_ws(body.substr(0, colon));
      const auto exps = detail::split_ws(body.substr(colon + 1));
      if (coef.size() != 2)
        throw ParseError(lineno, "coefficient needs exactly two numbers <re> <im>");
      const auto re = parse_double(coef[0]);
      const auto im = parse_double(coef[1]);
      if (!re || !im)
        throw ParseError(lineno, "malformed coefficient");
      if (*re == 0.0 && *im == 0.0)
        throw ParseError(lineno, "zero coefficient");
      if (exps.empty())
        throw ParseError(lineno, "monomial needs at least one exponent");
      if (n && exps.size() != *n)
        throw ParseError(lineno, "dimension mismatch: " + std::to_string(exps.size()) +
                                     " exponents but n = " + std::to_string(*n));
      std::vector<std::uint32_t> e;
      for (const auto &tok : exps) {
        const auto v = parse_int(tok);
        if (!v || *v < 0 || *v > kMaxExponent)
          throw ParseError(lineno, "exponent must be an integer in [0, " +
                                       std::to_string(kMaxExponent) + "]: '" + tok + "'");
        e.push_back(static_cast<std::uint32_t>(*v));
      }
      if (!n)
        n = e.size();
      ExponentVector ev(std::move(e));
      if (ev.is_zero())
        throw ParseError(lineno, "constant generator violates u(0) = 0");
      try {
        gens.emplace_back(Complex(*re, *im), std::move(ev));
      } catch (const InvalidInput &err) {
        throw ParseError(lineno, err.what());
      }
      if (!first_mon_line)
        first_mon_line = lineno;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(lineno, "unrecognized statement '" + line + "'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));

    auto want_int = [&](std::int64_t lo) {
      const auto v = parse_int(value);
      if (!v || *v < lo)
        throw ParseError(lineno, key + " must be an integer >= " + std::to_string(lo));
      return *v;
    };

    if (key == "n") {
      const auto v = want_int(1);
      if (!gens.empty() && static_cast<std::size_t>(v) != gens.front().dimension())
        throw ParseError(lineno, "dimension mismatch with earlier monomials");
      if (n && *n != static_cast<std::size_t>(v))
        throw ParseError(lineno, "dimension declared twice with different values");
      n = static_cast<std::size_t>(v);
    } else if (key == "radius") {
      const auto v = parse_double(value);
      if (!v || !(*v > 0.0 && *v <= 1.0))
        throw ParseError(lineno, "radius must lie in (0, 1]");
      plan.radius = *v;
    } else if (key == "radial_points") {
      plan.radial_points = static_cast<int>(want_int(2));
    } else if (key == "phase_points") {
      plan.phase_points = static_cast<int>(want_int(1));
    } else if (key == "random_points") {
      plan.random_points = static_cast<int>(want_int(0));
    } else if (key == "seed") {
      const auto v = parse_uint64(value);
      if (!v)
        throw ParseError(lineno, "seed must be an unsigned 64-bit integer");
      plan.seed = *v;
    } else if (key == "deltas") {
      const auto dots = value.find("..");
      try {
        if (dots != std::string::npos) {
          const auto k1 = parse_int(detail::trim(value.substr(0, dots)));
          const auto k2 = parse_int(detail::trim(value.substr(dots + 2)));
          if (!k1 || !k2)
            throw ParseError(lineno, "deltas range must read <k1>..<k2>");
          plan.deltas = delta_decades(static_cast<int>(*k1), static_cast<int>(*k2));
        } else {
          plan.deltas.clear();
          for (const auto &tok : detail::split_ws(value)) {
            const auto d = parse_double(tok);
            if (!d || !(*d > 0.0 && *d < 1.0))
              throw ParseError(lineno, "every delta must lie in (0, 1)");
            plan.deltas.push_back(*d);
          }
          if (plan.deltas.empty())
            throw ParseError(lineno, "deltas list is empty");
        }
      } catch (const ParseError &) {
        throw;
      } catch (const InvalidInput &err) {
        throw ParseError(lineno, err.what());
      }
    } else {
      throw ParseError(lineno, "unknown key '" + key + "'");
    }
  }

  if (gens.empty())
    throw ParseError(lineno, "no 'mon:' generators given");
  plan.validate();
  return Problem{MixedTerm(*n, std::move(gens)), plan};
}

/// Canonical text form; parse_problem(serialize_problem(p)) reproduces p exactly.
inline std::string serialize_problem(const Problem &p) {
  std::ostringstream out;
  const auto &u = p.mixed_term;
  out << "n = " << u.dimension() << "\n";
  for (const auto &g : u.generators()) {
    out << "mon: " << format17(g.coefficient().real()) << " " << format17(g.coefficient().imag())
        << " :";
    for (auto e : g.exponents().entries())
      out << " " << e;
    out << "\n";
  }
  out << "radius = " << format17(p.plan.radius) << "\n";
  out << "radial_points = " << p.plan.radial_points << "\n";
  out << "phase_points = " << p.plan.phase_points << "\n";
  out << "random_points = " << p.plan.random_points << "\n";
  out << "deltas =";
  for (double d : p.plan.deltas)
    out << " " << format17(d);
  out << "\n";
  out << "seed = " << p.plan.seed << "\n";
  return out.str();
}

inline std::string problem_digest(const Problem &p) {
  return "fnv1a64:" + hex64(fnv1a64(serialize_problem(p)));
}

} // namespace levicert
