#pragma once

// Command-line front end. run() is the whole program minus process setup so
// it can be driven from tests.
//
// Exit codes: 0 success, 1 other error, 2 invalid ring, 3 non-principal
// ideal, 4 malformed input, 5 certificate rejected by `verify`.

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qxgcd/engine.hpp"
#include "qxgcd/errors.hpp"
#include "qxgcd/ideal.hpp"
#include "qxgcd/literal.hpp"
#include "qxgcd/qform.hpp"
#include "qxgcd/ring.hpp"

namespace qxgcd::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kInvalidRing = 2,
  kNonPrincipal = 3,
  kParseError = 4,
  kInvalidCertificate = 5,
};

inline Int parse_integer(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string body = text.substr(i, j - i);
  std::size_t k = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
  if (k == body.size()) throw ParseError("expected an integer", i + k);
  for (std::size_t p = k; p < body.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(body[p]))) {
      throw ParseError("expected an integer", i + p);
    }
  }
  return Int(body[0] == '+' ? body.substr(1) : body);
}

// "a,b,c"
inline QForm parse_form(const std::string& text) {
  std::vector<Int> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma - start);
    try {
      coeffs.push_back(parse_integer(piece));
    } catch (const ParseError& e) {
      throw ParseError("malformed form coefficient", start + e.position());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coeffs.size() != 3) {
    throw ParseError("form needs exactly three coefficients a,b,c", 0);
  }
  return {coeffs[0], coeffs[1], coeffs[2]};
}

namespace detail {

inline std::string json_pair(const QInt& z) {
  return "[" + z.x0.get_str() + "," + z.x1.get_str() + "]";
}

inline std::string json_report(const RingSpec& ring, const GcdReport& rep,
                               bool verified) {
  std::ostringstream os;
  os << "{\"d\":" << ring.d << ",\"g\":" << json_pair(rep.cert.g)
     << ",\"u\":" << json_pair(rep.cert.u) << ",\"v\":" << json_pair(rep.cert.v)
     << ",\"basis\":[" << rep.basis.a << "," << rep.basis.b << ","
     << rep.basis.c << "]"
     << ",\"form\":[" << rep.form.a << "," << rep.form.b << "," << rep.form.c
     << "]"
     << ",\"verified\":" << (verified ? "true" : "false") << "}";
  return os.str();
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Extended gcd of quadratic integers"};
  app.name("qxgcd");
  app.require_subcommand(1);

  std::string d_text, x_text, y_text, g_text, u_text, v_text, form_text;
  bool json = false;

  auto* gcd_cmd = app.add_subcommand("gcd", "gcd and Bezout coefficients of X, Y");
  gcd_cmd->add_option("--d", d_text, "square-free d of Q(sqrt(d))")->required();
  gcd_cmd->add_option("X", x_text, "first element, e.g. -70+93t")->required();
  gcd_cmd->add_option("Y", y_text, "second element")->required();
  gcd_cmd->add_flag("--json", json, "emit JSON");

  auto* norm_cmd = app.add_subcommand("norm", "norm and trace of X");
  norm_cmd->add_option("--d", d_text)->required();
  norm_cmd->add_option("X", x_text)->required();

  auto* form_cmd =
      app.add_subcommand("reduce-form", "reduce a binary quadratic form");
  form_cmd->add_option("--d-form", form_text, "coefficients a,b,c")->required();

  auto* ideal_cmd = app.add_subcommand("ideal", "Z-basis [A, B+Ct] of (X, Y)");
  ideal_cmd->add_option("--d", d_text)->required();
  ideal_cmd->add_option("X", x_text)->required();
  ideal_cmd->add_option("Y", y_text)->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "check U*X + V*Y = g with g = gcd(X, Y)");
  verify_cmd->add_option("--d", d_text)->required();
  verify_cmd->add_option("X", x_text)->required();
  verify_cmd->add_option("Y", y_text)->required();
  verify_cmd->add_option("--g", g_text)->required();
  verify_cmd->add_option("--u", u_text)->required();
  verify_cmd->add_option("--v", v_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*form_cmd) {
      const QForm q = parse_form(form_text);
      const Int disc = discriminant(q);
      out << "form: " << q << "\n";
      out << "discriminant: " << disc << "\n";
      const ReducedForm red =
          disc < 0 ? reduce_definite(q) : reduce_indefinite(q);
      out << "reduced: " << red.form << "\n";
      out << "transform: " << red.transform << "\n";
      try {
        const SolutionPair sol = solve_unit_rep(q);
        out << "unit representation: " << sol.m << " " << sol.n
            << " (value " << evaluate(q, sol.m, sol.n) << ")\n";
      } catch (const NonPrincipal&) {
        out << "unit representation: none\n";
      }
      return kOk;
    }

    const RingSpec ring = make_ring(parse_integer(d_text));
    const QInt x = parse_element(x_text);

    if (*norm_cmd) {
      out << "norm: " << norm(ring, x) << "\n";
      out << "trace: " << trace(ring, x) << "\n";
      return kOk;
    }

    const QInt y = parse_element(y_text);

    if (*ideal_cmd) {
      const IdealBasis basis = sum_basis(ring, x, y).basis.basis;
      out << "A: " << basis.a << "\n";
      out << "B: " << basis.b << "\n";
      out << "C: " << basis.c << "\n";
      out << "ideal norm: " << ideal_norm(basis) << "\n";
      return kOk;
    }

    if (*verify_cmd) {
      const Certificate cert{parse_element(g_text), parse_element(u_text),
                             parse_element(v_text)};
      const bool ok = verify_certificate(ring, x, y, cert);
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? kOk : kInvalidCertificate;
    }

    const GcdReport rep = quadratic_xgcd_report(ring, x, y);
    const bool verified = verify_certificate(ring, x, y, rep.cert);
    if (json) {
      out << detail::json_report(ring, rep, verified) << "\n";
    } else {
      out << "g = " << format_element(rep.cert.g) << "\n";
      out << "U = " << format_element(rep.cert.u) << "\n";
      out << "V = " << format_element(rep.cert.v) << "\n";
      out << "basis: [" << rep.basis.a << ", " << rep.basis.b << "+"
          << rep.basis.c << "t]\n";
      out << "form: " << rep.form << "\n";
      out << "verified: " << (verified ? "true" : "false") << "\n";
    }
    return kOk;
  } catch (const InvalidRing& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidRing;
  } catch (const NonPrincipal& e) {
    err << "error: " << e.what() << "\n";
    return kNonPrincipal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace qxgcd::cli
