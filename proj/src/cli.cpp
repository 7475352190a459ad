#include "ulrich/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulrich/certify.hpp"
#include "ulrich/diophantine.hpp"
#include "ulrich/picard.hpp"
#include "ulrich/qexact.hpp"
#include "ulrich/ulrich_core.hpp"

namespace ulrich::cli {

namespace dio = diophantine;

using json = nlohmann::ordered_json;
using qexact::Int;
using qexact::Rational;

namespace {

// ---------------------------------------------------------------------------
// picard class syntax: "(a;b1,...,br)", parentheses optional.

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position + 1) + ": " + what),
        pos(position) {}
  std::size_t pos;
};

long parse_integer(const std::string& s, std::size_t& i) {
  const std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw SyntaxError(i, "expected an integer");
  long value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i] - '0');
    if (value > 1000000000) throw SyntaxError(start, "integer out of range");
    ++i;
  }
  return s[start] == '-' ? -value : value;
}

picard::PicardClass parse_class(const std::string& s) {
  std::size_t i = 0;
  const bool parenthesized = i < s.size() && s[i] == '(';
  if (parenthesized) ++i;
  picard::PicardClass d;
  d.a = parse_integer(s, i);
  if (i >= s.size() || s[i] != ';') throw SyntaxError(i, "expected ';'");
  ++i;
  d.b.push_back(parse_integer(s, i));
  while (i < s.size() && s[i] == ',') {
    ++i;
    d.b.push_back(parse_integer(s, i));
  }
  if (parenthesized) {
    if (i >= s.size() || s[i] != ')') throw SyntaxError(i, "expected ')'");
    ++i;
  }
  if (i != s.size()) throw SyntaxError(i, "unexpected trailing characters");
  return d;
}

// ---------------------------------------------------------------------------

json certificate_json(const cert::Certificate& c) {
  return json::parse(c.to_json());
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

struct Condition {
  std::string name;
  bool applicable;
  bool holds;
  std::string detail;
};

std::vector<Condition> evaluate_conditions(const core::VarietyParams& p) {
  std::vector<Condition> out;
  const auto add = [&](const std::string& name, bool applicable, bool holds,
                       const std::string& detail) {
    out.push_back({name, applicable, applicable ? holds : true, detail});
  };
  const Int n = p.n;
  const std::string dash = "needs more invariants";

  {
    std::ostringstream os;
    if (p.KH)
      os << "2g - 2 = " << 2 * p.g - 2 << ", K.H + (n-1)d = "
         << *p.KH + (n - 1) * p.d;
    add("sectional genus relation", p.KH.has_value(),
        core::genus_consistent(p), p.KH ? os.str() : dash);
  }
  {
    const Int lhs = (n * p.k - 1) * p.d;
    const Int rhs = (n + 2) * (p.g - 1);
    std::ostringstream os;
    os << "(nk - 1)d = " << lhs << ", (n+2)(g-1) = " << rhs;
    add("degree-genus linear relation", true, lhs == rhs, os.str());
  }
  {
    std::ostringstream os;
    const Rational want = core::canonical_degree_product(p.n, p.d, p.k);
    if (p.KH) os << "required " << qexact::to_string(want) << ", given " << *p.KH;
    add("canonical degree product", p.KH.has_value(),
        p.KH && Rational(*p.KH) == want, p.KH ? os.str() : dash);
  }
  {
    const Rational bound = core::bigbound_k(p.n, p.d);
    std::ostringstream os;
    os << "k = " << p.k << " <= " << qexact::to_string(bound);
    add("twist within degree bound", true, Rational(p.k) <= bound, os.str());
  }
  {
    const auto tb = core::bou_max_k(p.n);
    std::ostringstream os;
    os << "k = " << p.k << " <= " << tb.k_max;
    add("twist within dimension bound", tb.derivation_valid,
        p.k <= tb.k_max,
        tb.derivation_valid ? os.str() : "derivation needs n <= 12");
  }
  {
    const bool app = p.K2.has_value() && p.c2.has_value();
    std::ostringstream os;
    if (app)
      os << "residual " << qexact::to_string(core::c2_identity_residual(p));
    add("degree-six consistency identity", app,
        app && core::c2_identity_residual(p) == 0, app ? os.str() : dash);
  }
  {
    const bool app = p.n >= 2 && p.K2.has_value() && p.c2.has_value();
    std::ostringstream os;
    if (app) os << "(n-1)K^2 = " << (n - 1) * *p.K2 << " <= 2n c2 = "
                << 2 * n * *p.c2;
    add("Bogomolov inequality", app,
        app && (n - 1) * *p.K2 <= 2 * n * *p.c2, app ? os.str() : dash);
  }
  {
    const bool app = p.n == 2 && p.KH.has_value() && p.K2.has_value();
    std::ostringstream os;
    if (app) os << "d K^2 = " << p.d * *p.K2 << " <= (K.H)^2 = "
                << *p.KH * *p.KH;
    add("Hodge index inequality", app, app && p.d * *p.K2 <= *p.KH * *p.KH,
        app ? os.str() : dash);
  }
  {
    const bool app = p.n == 2 && p.KH.has_value() && p.K2.has_value() &&
                     p.chi.has_value();
    bool holds = false;
    std::ostringstream os;
    if (app) {
      const auto r = core::surface_conditions(p.d, p.g, p.k, *p.chi, *p.K2, *p.KH);
      holds = r.all_zero();
      os << "residuals (" << qexact::to_string(r.degree) << ", "
         << qexact::to_string(r.canonical) << ", "
         << qexact::to_string(r.chern) << ")";
    }
    add("surface condition residuals", app, holds, app ? os.str() : dash);
  }
  {
    const bool app = p.n == 2 && p.chi.has_value();
    bool holds = false;
    std::ostringstream os;
    if (app) {
      const auto w = core::surface_chi_window(p.d, p.k);
      holds = w.lower <= Rational(*p.chi) && Rational(*p.chi) <= w.upper;
      os << "chi = " << *p.chi << " in [" << qexact::to_string(w.lower)
         << ", " << qexact::to_string(w.upper) << "]";
    }
    add("chi window", app, holds, app ? os.str() : dash);
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_certify(const std::vector<std::string>& requested,
                const certify::Options& opt, const std::string& format,
                std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (requested.size() == 1 && requested.front() == "all") {
    ids = certify::ids();
  } else {
    const auto& known = certify::ids();
    for (const auto& id : requested) {
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        err << "unknown certificate id: " << id << "\n";
        err << "valid ids:";
        for (const auto& k : known) err << " " << k;
        err << "\n";
        return 2;
      }
      ids.push_back(id);
    }
  }

  bool ok = true;
  std::vector<cert::Certificate> results;
  for (const auto& id : ids) {
    results.push_back(certify::run(id, opt));
    const auto st = results.back().status();
    ok = ok && (st == cert::Certificate::Status::Verified ||
                st == cert::Certificate::Status::RefutedAsExpected);
  }

  if (format == "table") {
    bool first = true;
    for (const auto& c : results) {
      if (!first) out << "\n";
      first = false;
      out << c.to_table();
    }
  } else if (results.size() == 1) {
    emit(out, certificate_json(results.front()));
  } else {
    json arr = json::array();
    for (const auto& c : results) arr.push_back(certificate_json(c));
    emit(out, arr);
  }
  return ok ? 0 : 1;
}

int cmd_solve(const std::string& problem, long a_max, const std::string& format,
              std::ostream& out, std::ostream& err) {
  try {
    if (problem == "conto") {
      const auto sols = dio::solve_conto(a_max);
      if (format == "table") {
        for (const auto& s : sols)
          out << "(" << s.a << ";" << s.c[0] << "," << s.c[1] << "," << s.c[2]
              << "," << s.c[3] << ")\n";
      } else {
        json doc;
        doc["problem"] = "conto";
        doc["a_max"] = a_max;
        doc["solutions"] = json::array();
        for (const auto& s : sols)
          doc["solutions"].push_back({{"a", s.a}, {"c", s.c}});
        emit(out, doc);
      }
    } else {
      const auto sols = dio::solve_632num();
      if (format == "table") {
        for (const auto& s : sols) {
          out << "(" << s.a << ";";
          for (int i = 0; i < 6; ++i) out << (i ? "," : "") << s.b[i];
          out << ")\n";
        }
      } else {
        json doc;
        doc["problem"] = "632num";
        doc["solutions"] = json::array();
        for (const auto& s : sols)
          doc["solutions"].push_back({{"a", s.a}, {"b", s.b}});
        emit(out, doc);
      }
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_check(const core::VarietyParams& p, const std::string& format,
              std::ostream& out) {
  const auto conds = evaluate_conditions(p);
  bool ok = true;
  for (const auto& c : conds) ok = ok && c.holds;

  if (format == "table") {
    std::size_t width = 0;
    for (const auto& c : conds) width = std::max(width, c.name.size());
    for (const auto& c : conds) {
      out << (!c.applicable ? "  --  " : c.holds ? "  ok  " : " FAIL ")
          << c.name << std::string(width - c.name.size() + 2, ' ')
          << c.detail << "\n";
    }
    out << (ok ? "satisfied" : "violated") << "\n";
  } else {
    json doc;
    doc["command"] = "check";
    json params;
    params["n"] = p.n;
    params["d"] = qexact::to_string(p.d);
    params["g"] = qexact::to_string(p.g);
    params["k"] = qexact::to_string(p.k);
    if (p.KH) params["KH"] = qexact::to_string(*p.KH);
    if (p.K2) params["K2"] = qexact::to_string(*p.K2);
    if (p.c2) params["c2"] = qexact::to_string(*p.c2);
    if (p.chi) params["chi"] = qexact::to_string(*p.chi);
    doc["params"] = params;
    doc["conditions"] = json::array();
    for (const auto& c : conds)
      doc["conditions"].push_back({{"name", c.name},
                                   {"applicable", c.applicable},
                                   {"holds", c.holds},
                                   {"detail", c.detail}});
    doc["verdict"] = ok ? "satisfied" : "violated";
    emit(out, doc);
  }
  return ok ? 0 : 1;
}

int cmd_picard_eff(const std::string& text, const std::string& format,
                   std::ostream& out, std::ostream& err) {
  picard::PicardClass d;
  try {
    d = parse_class(text);
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return 2;
  }
  picard::EffectivityVerdict v;
  try {
    v = picard::decide_effective(d);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }

  if (format == "table") {
    out << d.to_string() << (v.effective ? " effective" : " not effective");
    if (v.effective) out << ", h0 = " << qexact::to_string(v.h0);
    out << "\n";
    for (const auto& e : v.trace) out << "  - " << e.to_string() << "\n";
    out << "  residue " << v.residue.to_string() << "\n";
  } else {
    json doc;
    doc["command"] = "picard eff";
    doc["class"] = d.to_string();
    doc["effective"] = v.effective;
    if (v.effective) doc["h0"] = qexact::to_string(v.h0);
    doc["trace"] = json::array();
    for (const auto& e : v.trace) doc["trace"].push_back(e.to_string());
    doc["residue"] = v.residue.to_string();
    emit(out, doc);
  }
  return 0;
}

int cmd_list(const std::string& format, std::ostream& out) {
  const auto& ids = certify::ids();
  if (format == "table") {
    std::size_t width = 0;
    for (const auto& id : ids) width = std::max(width, id.size());
    for (const auto& id : ids)
      out << id << std::string(width - id.size() + 2, ' ')
          << certify::describe(id) << "\n";
  } else {
    json arr = json::array();
    for (const auto& id : ids)
      arr.push_back({{"id", id}, {"description", certify::describe(id)}});
    emit(out, arr);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact arithmetic certificates for twisted tangent-bundle "
               "classifications"};
  app.name("ulrich");
  app.require_subcommand(1);

  certify::Options opt;
  if (const char* env = std::getenv("ULRICH_AMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0') {
      err << "ULRICH_AMAX must be an integer, got '" << env << "'\n";
      return 2;
    }
    opt.a_max = v;
  }

  // certify
  auto* certify_cmd =
      app.add_subcommand("certify", "run named certificates; see 'list'");
  std::vector<std::string> ids;
  certify_cmd->add_option("id", ids, "certificate ids, or 'all'")->required();
  certify_cmd->add_option("--a-max", opt.a_max,
                          "enumeration cap for the four-square problem");
  certify_cmd->add_option("--max-c", opt.max_c,
                          "largest c in the quadric curve family");
  certify_cmd->add_option("--d-max", opt.d_max,
                          "degree cap for parameter triples");
  certify_cmd->add_option("--k-max", opt.k_max,
                          "largest odd twist on the elliptic product");
  std::string certify_format = "json";
  certify_cmd->add_option("--format", certify_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run one finite enumeration");
  std::string problem;
  solve_cmd->add_option("problem", problem, "conto or 632num")
      ->required()
      ->check(CLI::IsMember({"conto", "632num"}));
  long solve_a_max = opt.a_max;
  solve_cmd->add_option("--a-max", solve_a_max, "enumeration cap (conto)");
  std::string solve_format = "json";
  solve_cmd->add_option("--format", solve_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // check
  auto* check_cmd = app.add_subcommand(
      "check", "evaluate the necessary conditions at explicit invariants");
  long n = 0, d = 0, g = 0, k = 0;
  long kh = 0, k2 = 0, c2 = 0, chi = 0;
  check_cmd->add_option("--n", n, "dimension")->required();
  check_cmd->add_option("--d", d, "degree H^n")->required();
  check_cmd->add_option("--g", g, "sectional genus")->required();
  check_cmd->add_option("--k", k, "twist")->required();
  auto* kh_opt = check_cmd->add_option("--KH", kh, "K.H^{n-1}");
  auto* k2_opt = check_cmd->add_option("--K2", k2, "K^2.H^{n-2}");
  auto* c2_opt = check_cmd->add_option("--c2", c2, "c2.H^{n-2}");
  auto* chi_opt = check_cmd->add_option("--chi", chi, "chi(O) (surfaces)");
  std::string check_format = "json";
  check_cmd->add_option("--format", check_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // picard
  auto* picard_cmd = app.add_subcommand(
      "picard", "divisor-class computations on plane blowups");
  picard_cmd->require_subcommand(1);
  auto* eff_cmd = picard_cmd->add_subcommand(
      "eff", "decide effectivity of a class (a;b1,...,br), r <= 6");
  std::string class_text;
  eff_cmd->add_option("class", class_text, "class, e.g. \"(2;1,1,1,1,1,1)\"")
      ->required();
  std::string picard_format = "json";
  eff_cmd->add_option("--format", picard_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // list
  auto* list_cmd =
      app.add_subcommand("list", "list certificate ids with descriptions");
  std::string list_format = "table";
  list_cmd->add_option("--format", list_format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    // CLI11's vector overload consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (certify_cmd->parsed())
      return cmd_certify(ids, opt, certify_format, out, err);
    if (solve_cmd->parsed())
      return cmd_solve(problem, solve_a_max, solve_format, out, err);
    if (check_cmd->parsed()) {
      if (n < 1 || d < 1) {
        err << "check: need n >= 1 and d >= 1\n";
        return 2;
      }
      core::VarietyParams p;
      p.n = static_cast<int>(n);
      p.d = d;
      p.g = g;
      p.k = k;
      if (kh_opt->count()) p.KH = kh;
      if (k2_opt->count()) p.K2 = k2;
      if (c2_opt->count()) p.c2 = c2;
      if (chi_opt->count()) p.chi = chi;
      return cmd_check(p, check_format, out);
    }
    if (picard_cmd->parsed())
      return cmd_picard_eff(class_text, picard_format, out, err);
    if (list_cmd->parsed()) return cmd_list(list_format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no command\n";
  return 2;
}

}  // namespace ulrich::cli
