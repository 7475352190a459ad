#include "ulrich/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/curves.hpp"
#include "ulrich/diophantine.hpp"
#include "ulrich/hilbert.hpp"
#include "ulrich/picard.hpp"
#include "ulrich/qexact.hpp"
#include "ulrich/ulrich_core.hpp"

namespace ulrich::certify {

namespace dio = diophantine;

using cert::Certificate;
using qexact::AffineExpr;
using qexact::frac;
using qexact::Int;
using qexact::is_integer;
using qexact::poly_eval;
using qexact::QPoly;
using qexact::Rational;

namespace {

std::string conto_str(const dio::ContoSolution& s) {
  std::ostringstream os;
  os << "(" << s.a << ";" << s.c[0] << "," << s.c[1] << "," << s.c[2] << ","
     << s.c[3] << ")";
  return os.str();
}

std::string sextic_str(const dio::SexticSolution& s) {
  std::ostringstream os;
  os << "(" << s.a << ";";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << s.b[i];
  os << ")";
  return os.str();
}

std::string triple_str(const dio::ParamTriple& t) {
  std::ostringstream os;
  os << "(" << t.n << ", " << t.d << ", " << t.g << ")";
  return os.str();
}

// Fold a sub-certificate into `dst`, prefixing every check and witness.
// Pass/fail is preserved: the string overload of check() compares renderings,
// which is exactly how the sub-certificate decided.
void merge(Certificate& dst, const Certificate& src, const std::string& prefix) {
  for (const auto& cr : src.checks())
    dst.check(prefix + cr.name, cr.expected, cr.got);
  for (const auto& w : src.witnesses())
    dst.witness(prefix + w.name, w.value);
}

const AffineExpr& identity_named(const core::FibrationCertificate& fc,
                                 const std::string& name) {
  for (const auto& [n, e] : fc.identities)
    if (n == name) return e;
  throw std::logic_error("missing identity: " + name);
}

// ---------------------------------------------------------------------------

Certificate conto_cert(const Options& opt) {
  Certificate c("conto",
                "four-square enumeration a^2 - 6a + 4 = c1^2 + c2^2 + c3^2 + c4^2 "
                "with c1 >= c2 >= c3 >= c4 >= 0 and a >= c1 + c2 + 3");
  const auto sols = dio::solve_conto(opt.a_max);
  c.check("solution count", 4, static_cast<long long>(sols.size()));
  const std::vector<dio::ContoSolution> expected = {
      {6, {1, 1, 1, 1}}, {6, {2, 0, 0, 0}}, {7, {3, 1, 1, 0}}, {9, {3, 3, 3, 2}}};
  c.check_true(
      "solutions are exactly {(6;1,1,1,1), (6;2,0,0,0), (7;3,1,1,0), (9;3,3,3,2)}",
      sols == expected);
  for (const auto& s : sols) {
    long sq = 0;
    for (long ci : s.c) sq += ci * ci;
    c.check(conto_str(s) + " square residual", 0,
            static_cast<long long>(s.a * s.a - 6 * s.a + 4 - sq));
    c.check_true(conto_str(s) + " margin a >= c1 + c2 + 3",
                 s.a >= s.c[0] + s.c[1] + 3);
  }
  const long wide = std::max<long>(opt.a_max, 256);
  c.check_true("scan extended to a_max = " + std::to_string(wide) +
                   " adds nothing",
               dio::solve_conto(wide) == sols);
  if (!sols.empty()) c.witness("largest a", std::to_string(sols.back().a));
  return c;
}

Certificate num632_cert(const Options&) {
  Certificate c("632num",
                "sextic-model enumeration a^2 - sum b_i^2 = 10, "
                "3a - sum b_i = 6 over b1 >= ... >= b6");
  const auto sols = dio::solve_632num();
  c.check("class count", 5, static_cast<long long>(sols.size()));
  const std::vector<dio::SexticSolution> expected = {
      {4, {1, 1, 1, 1, 1, 1}},
      {5, {2, 2, 2, 1, 1, 1}},
      {6, {3, 2, 2, 2, 2, 1}},
      {7, {3, 3, 3, 2, 2, 2}},
      {8, {3, 3, 3, 3, 3, 3}}};
  c.check_true("classes are exactly the five known tuples", sols == expected);
  for (const auto& s : sols) {
    long sq = 0, sum = 0;
    for (long bi : s.b) {
      sq += bi * bi;
      sum += bi;
    }
    c.check(sextic_str(s) + " self-intersection residual", 0,
            static_cast<long long>(s.a * s.a - sq - 10));
    c.check(sextic_str(s) + " degree residual", 0,
            static_cast<long long>(3 * s.a - sum - 6));
    c.check_true(sextic_str(s) + " within forced range 4 <= a <= 8",
                 4 <= s.a && s.a <= 8);
  }
  c.witness("a range proof", "(3a-6)^2 <= 6(a^2-10) <=> (a-4)(a-8) <= 0");
  return c;
}

Certificate model632_cert(const Options&) {
  Certificate c = picard::certify_632();
  // Degree is pinned by twist-2 sections at genus 3, and such sections exist.
  const auto d = core::degree_from_genus(1, 3, Rational(2));
  c.check_true("degree formula defined at (g, k) = (3, 2)", d.has_value());
  if (d) c.check("degree forced at genus 3, twist 2", Rational(6), *d);
  c.check_true("twist-2 sections exist at genus 3", curves::existence_k2(3));
  return c;
}

Certificate k1_surface_cert(const Options&) {
  Certificate c = picard::certify_k1_candidates();

  // The anticanonical member, embedded by H = -2K: degree 20, genus 6,
  // twist 1, chi = 1, K^2 = 5, c2 = 7.
  core::VarietyParams s;
  s.n = 2;
  s.d = 20;
  s.g = 6;
  s.k = 1;
  s.KH = -10;
  s.K2 = 5;
  s.c2 = 7;
  s.chi = 1;
  c.check_true("degree-20 member: sectional genus consistent",
               core::genus_consistent(s));
  const auto d = core::degree_from_genus(2, 6, Rational(1));
  c.check_true("degree formula defined at (n, g, k) = (2, 6, 1)", d.has_value());
  if (d) c.check("degree from genus 6 at twist 1", Rational(20), *d);
  c.check("twist from intersection numbers", Rational(1),
          core::k_from_intersections(2, 20, -10));
  c.check("canonical degree product at twist 1", Rational(-10),
          core::canonical_degree_product(2, 20, 1));

  const auto ch = core::ulrich_chern(s, 2);
  c.check("rank-2 first Chern product c1.H", Rational(50), ch.c1H);
  c.check_true("second Chern product computable", ch.c2H.has_value());
  if (ch.c2H) c.check("rank-2 second Chern product c2", Rational(37), *ch.c2H);
  // Independent route: c2 of the twisted tangent bundle directly,
  // c2(T(k)) = c2 - k*K.H + k^2*d on a surface.
  const Rational direct = Rational(7) - Rational(1) * Rational(-10) + Rational(20);
  c.check("tangent-twist route agrees", direct, ch.c2H.value_or(Rational(0)));

  c.check("Euler characteristic chi(E)", Rational(40),
          core::ulrich_euler(2, 20, 2, 0));
  c.check("chi(E(-1)) vanishes", Rational(0), core::ulrich_euler(2, 20, 2, -1));
  c.check("chi(E(-2)) vanishes", Rational(0), core::ulrich_euler(2, 20, 2, -2));

  const auto w = core::surface_chi_window(20, 1);
  c.check("chi window lower bound", Rational(0), w.lower);
  c.check("chi window upper bound", Rational(1), w.upper);
  c.check_true("chi = 1 inside the window", w.lower <= 1 && 1 <= w.upper);
  c.check_true("surface condition residuals vanish",
               core::surface_conditions(20, 6, 1, 1, 5, -10).all_zero());
  return c;
}

// --------------------------- Hilbert cases ---------------------------------

std::string contradiction_str(hilbert::CaseResult::Contradiction k) {
  switch (k) {
    case hilbert::CaseResult::Contradiction::Sign: return "sign";
    case hilbert::CaseResult::Contradiction::Integrality: return "integrality";
    case hilbert::CaseResult::Contradiction::None: return "none";
  }
  return "?";
}

// Checks shared by the three constrained-interpolation refutations.
void hilbert_common(Certificate& c, hilbert::CaseId id,
                    const hilbert::CaseSetup& setup,
                    const hilbert::CaseResult& res, long long root_count,
                    const Int& root_product, const Int& root_sum) {
  const auto cases = hilbert::all_cases();
  c.check_true("case registered",
               std::find(cases.begin(), cases.end(), id) != cases.end());
  c.check("registered case name", c.id(), hilbert::case_name(id));
  const auto& roots = setup.poly.known_roots;
  c.check("forced root count", root_count,
          static_cast<long long>(roots.size()));
  c.check("product of forced roots", root_product,
          qexact::elem_symmetric(roots, roots.size()));
  c.check("sum of forced roots", root_sum, qexact::elem_symmetric(roots, 1));
  const auto top = hilbert::rr_top_coefficients(setup.poly.n, setup.poly.fano_r);
  c.check("subleading coefficient multiplier", -Rational(setup.poly.fano_r) *
              Rational(setup.poly.n) / 2, top.tn1_multiple);

  bool roots_vanish = true;
  for (const Int& rho : roots)
    roots_vanish = roots_vanish && poly_eval(res.reconstructed, Rational(rho)) == 0;
  c.check_true("P vanishes at every forced root", roots_vanish);
  c.check("P(0)", Rational(1), poly_eval(res.reconstructed, Rational(0)));
  const Int t0 = setup.constraints.at(1).t0;
  c.check("P(" + qexact::to_string(t0) + ")", Rational(1),
          poly_eval(res.reconstructed, Rational(t0)));
  c.witness("leading coefficient u", qexact::to_string(res.u));
}

Certificate hilbert3d_cert(const Options&) {
  Certificate c("hilbert-3d",
                "degree-8 constrained interpolation with forced roots "
                "{1,2,3,5,10,15}: the leading coefficient is negative",
                /*refutation_expected=*/true);
  const auto setup = hilbert::build_case(hilbert::CaseId::Dim8Sextic);
  const auto res = hilbert::solve_case(hilbert::CaseId::Dim8Sextic);
  hilbert_common(c, hilbert::CaseId::Dim8Sextic, setup, res, 6, 4500, 36);

  const QPoly q = QPoly::from_roots(setup.poly.known_roots);
  c.check("Q(0)", Rational(4500), poly_eval(q, Rational(0)));
  c.check("Q(4)", Rational(-396), poly_eval(q, Rational(4)));
  c.check("trailing factor t^2 + a t + b: a", Rational(20), res.cofactor.at(1));
  c.check("u * b", frac(1, 4500), res.u * res.cofactor.at(0));
  c.check("elimination identity -38016 u = 1 + 396/4500",
          Rational(1) + frac(396, 4500), Rational(-38016) * res.u);
  c.check("u", frac(-17, 594000), res.u);
  c.check_true("u < 0 against ampleness", res.u < 0);
  c.check("A^8", frac(-952, 825), res.top_degree);
  c.check("contradiction", std::string("sign"), contradiction_str(res.kind));

  const auto prop = core::proportional_case(4, 4);
  c.check("proportionality class r", Int(4), prop.r);
  c.check("proportionality class s", Int(5), prop.s);
  c.check_true("proportionality class primitive", prop.primitive);
  c.check("polarization multiple lower bound", frac(22, 10),
          hilbert::m_lower_bound(8, 4));
  c.check_true("multiple s = 5 clears the bound",
               Rational(5) > hilbert::m_lower_bound(8, 4));
  return c;
}

Certificate hilbert4d_cert(const Options&) {
  Certificate c("hilbert-4d",
                "degree-10 constrained interpolation with forced roots "
                "{1,2,3,4,6,8,10} and the imported c2 ratio: the leading "
                "coefficient is negative",
                /*refutation_expected=*/true);
  const auto setup = hilbert::build_case(hilbert::CaseId::Dim10Quartic);
  const auto res = hilbert::solve_case(hilbert::CaseId::Dim10Quartic);
  hilbert_common(c, hilbert::CaseId::Dim10Quartic, setup, res, 7, 11520, 34);

  const QPoly q = QPoly::from_roots(setup.poly.known_roots);
  c.check("Q(0)", Rational(-11520), poly_eval(q, Rational(0)));
  c.check("imported ratio A^8.c2 / A^10", Rational(115), setup.c2_ratio);
  c.check("t^8 coefficient multiplier", Rational(1050),
          setup.constraints.at(3).u_multiple);
  c.check("trailing factor t^3 + a t^2 + ...: a", Rational(9),
          res.cofactor.at(2));
  c.check("u * c", frac(-1, 11520), res.u * res.cofactor.at(0));
  c.check("A^10", frac(-217, 107), res.top_degree);
  c.check("A^10 as displayed", frac(-1302, 642), res.top_degree);
  c.check("closing identity 67 A^10 + 5 A^8.c2 + 1302", Rational(0),
          Rational(67) * res.top_degree +
              Rational(5) * (setup.c2_ratio * res.top_degree) + Rational(1302));
  c.check_true("u < 0 against ampleness", res.u < 0);
  c.check("contradiction", std::string("sign"), contradiction_str(res.kind));

  const auto prop = core::proportional_case(5, 4);
  c.check("proportionality class r", Int(5), prop.r);
  c.check("proportionality class s", Int(2), prop.s);
  c.check_true("proportionality class needed a cancellation", !prop.primitive);
  return c;
}

Certificate hilbert4e_cert(const Options&) {
  Certificate c("hilbert-4e",
                "degree-10 constrained interpolation with forced roots "
                "{1,2,3,4,6,12,18,24}: the top self-intersection is a "
                "non-integral rational in (0, 1)",
                /*refutation_expected=*/true);
  const auto setup = hilbert::build_case(hilbert::CaseId::Dim10Sextic);
  const auto res = hilbert::solve_case(hilbert::CaseId::Dim10Sextic);
  hilbert_common(c, hilbert::CaseId::Dim10Sextic, setup, res, 8, 746496, 70);

  const QPoly q = QPoly::from_roots(setup.poly.known_roots);
  c.check("Q(0)", Rational(746496), poly_eval(q, Rational(0)));
  c.check("Q(5)", Rational(41496), poly_eval(q, Rational(5)));
  c.check("trailing factor t^2 + a t + b: a", Rational(45), res.cofactor.at(1));
  c.check("u * b", frac(1, 746496), res.u * res.cofactor.at(0));
  c.check("elimination identity u = (1 - 41496/746496)/10374000",
          (Rational(1) - frac(41496, 746496)) / Rational(10374000), res.u);
  c.check("A^10", frac(5875, 17784), res.top_degree);
  c.check_true("0 < A^10 < 1", res.top_degree > 0 && res.top_degree < 1);
  c.check_true("A^10 not an integer", !is_integer(res.top_degree));
  c.check("contradiction", std::string("integrality"),
          contradiction_str(res.kind));

  const auto prop = core::proportional_case(5, 5);
  c.check("proportionality class r", Int(5), prop.r);
  c.check("proportionality class s", Int(6), prop.s);
  c.check_true("proportionality class primitive", prop.primitive);
  c.check("polarization multiple lower bound", frac(19, 6),
          hilbert::m_lower_bound(10, 5));
  c.check_true("multiple s = 6 clears the bound",
               Rational(6) > hilbert::m_lower_bound(10, 5));
  return c;
}

// ------------------------- fibration refutations ---------------------------

Certificate noqf4_cert(const Options&) {
  Certificate c("noqf4",
                "four-dimensional quadric fibration over a curve: "
                "13 d = 48 (e+2) has no admissible solution",
                /*refutation_expected=*/true);
  const auto fc = core::noqf4_certify();
  for (const auto& [name, expr] : fc.identities)
    c.witness(name, expr.to_string());
  for (const auto& [name, value] : fc.notes) c.witness("note: " + name, value);

  c.check("contradiction", std::string("divisibility"),
          core::FibrationCertificate::kind_name(fc.kind));
  const auto& d_expr = identity_named(fc, "H^4");
  const auto& kh3 = identity_named(fc, "K.H^3");
  const auto& gap = identity_named(fc, "required: 13d - 48(e+2) = 0");
  c.check("H^4 at b = 0", Rational(64), d_expr.eval({{"b", 0}, {"e", 0}}));
  c.check("H^4 at b = 1", Rational(80), d_expr.eval({{"b", 1}, {"e", 0}}));
  c.check("K.H^3 at (e, b) = (5, 1)", Rational(-112),
          kh3.eval({{"b", 1}, {"e", 5}}));
  c.check("slope target at (n, k) = (4, 2), d = 3", Rational(-2),
          core::canonical_degree_product(4, 3, 2));

  // Solve the gap identity for e at b = 0 (so d = 64): 13*64 = 48 (e+2).
  const Rational ce = gap.coeffs.count("e") ? gap.coeffs.at("e") : Rational(0);
  c.check_true("gap identity depends on e", ce != 0);
  c.check("gap coefficient of d", Rational(13),
          gap.coeffs.count("d") ? gap.coeffs.at("d") : Rational(0));
  const Rational d0 = d_expr.eval({{"b", 0}, {"e", 0}});
  const Rational e_at_b0 =
      -gap.eval({{"d", d0}, {"e", 0}, {"b", 0}}) / ce;
  c.check("e required at b = 0", frac(46, 3), e_at_b0);
  c.check_true("required e is not an integer", !is_integer(e_at_b0));

  bool any_multiple = false;
  for (int e2 = 1; e2 <= 7; ++e2) any_multiple = any_multiple || e2 % 13 == 0;
  c.check_true("no multiple of 13 among e + 2 in [1, 7]", !any_multiple);
  return c;
}

Certificate nosc4_cert(const Options&) {
  Certificate c("nosc4",
                "four-dimensional conic bundle over a surface: integrality "
                "forces d >= 48 while slope semistability forces d <= 24",
                /*refutation_expected=*/true);
  const auto fc = core::nosc4_certify();
  for (const auto& [name, expr] : fc.identities)
    c.witness(name, expr.to_string());
  for (const auto& [name, value] : fc.notes) c.witness("note: " + name, value);

  c.check("contradiction", std::string("interval-empty"),
          core::FibrationCertificate::kind_name(fc.kind));
  const auto& kb2 = identity_named(fc, "K_B^2");
  const auto& kbc1 = identity_named(fc, "K_B.c1");
  const auto& mu_tx = identity_named(fc, "mu(T_X)");
  const auto& mu_tb = identity_named(fc, "mu(pi*T_B)");

  AffineExpr expect_kbc1 = AffineExpr::constant_term(Rational(9)) +
                           AffineExpr::variable("d").scaled(frac(-5, 48));
  c.check_true("K_B.c1 = 9 - 5/48 d", kbc1 == expect_kbc1);
  c.check("K_B^2 at d = 48", Rational(0), kb2.eval({{"d", 48}}));
  c.check("mu(T_X) at d = 48", Rational(8), mu_tx.eval({{"d", 48}}));
  c.check("mu(pi*T_B) at d = 48", Rational(-4), mu_tb.eval({{"d", 48}}));
  c.check("slope target at (n, k) = (4, 2), d = 48", Rational(-32),
          core::canonical_degree_product(4, 48, 2));

  // K_B^2 integral: its d-coefficient is -7/48 with constant 7, and
  // gcd(7, 48) = 1, so 48 | d.
  c.check("K_B^2 coefficient of d", frac(-7, 48),
          kb2.coeffs.count("d") ? kb2.coeffs.at("d") : Rational(0));
  const Rational cd = kb2.coeffs.count("d") ? kb2.coeffs.at("d") : Rational(0);
  c.check("smallest degree with K_B^2 integral", Int(48), Int(cd.get_den()));
  // Semistability mu(pi*T_B) >= mu(T_X): slack is affine in d.
  const AffineExpr slack = mu_tb - mu_tx;
  const Rational sd = slack.coeffs.count("d") ? slack.coeffs.at("d") : Rational(0);
  c.check_true("slack decreases in d", sd < 0);
  c.check("largest semistable degree", Rational(24), -slack.constant / sd);
  c.check_true("interval [48, 24] empty", Rational(48) > Rational(24));
  return c;
}

// ------------------------------ bounds -------------------------------------

Certificate bound_cert(const Options&) {
  Certificate c("bound",
                "twist bounds: quadratic dimension bound, degree bound, "
                "effectivity thresholds, hypersurface and proportional "
                "exclusions");
  // q(k) = 4nk^2 - 4n(n+1)k - 3n^2 - 7n - 4; bou_max_k returns the largest
  // k with q(k) <= 0.
  const auto qval = [](long n, const Int& k) -> Rational {
    return Rational(4 * n) * Rational(k) * Rational(k) -
           Rational(4 * n * (n + 1)) * Rational(k) -
           Rational(3 * n * n + 7 * n + 4);
  };
  bool bracketed = true, capped = true, valid = true, is_np1 = true;
  for (int n = 2; n <= 12; ++n) {
    const auto tb = core::bou_max_k(n);
    bracketed = bracketed && qval(n, tb.k_max) <= 0 && qval(n, tb.k_max + 1) > 0;
    capped = capped && tb.k_max <= n + 1;
    valid = valid && tb.derivation_valid;
    is_np1 = is_np1 && tb.k_max == n + 1;
  }
  c.check_true("q(k_max) <= 0 < q(k_max + 1) for n = 2..12", bracketed);
  c.check_true("k_max <= n + 1 for n = 2..12", capped);
  c.check_true("derivation valid for n = 2..12", valid);
  c.check_true("k_max = n + 1 throughout n = 2..12", is_np1);
  c.check("k_max at n = 2", Int(3), core::bou_max_k(2).k_max);
  c.check("k_max at n = 12", Int(13), core::bou_max_k(12).k_max);
  c.check_true("derivation invalid at n = 13",
               !core::bou_max_k(13).derivation_valid);

  c.check("degree bound at (n, d) = (1, 1)", frac(-5, 4), core::bigbound_k(1, 1));
  c.check("degree bound at (n, d) = (1, 6)", frac(5, 2), core::bigbound_k(1, 6));
  c.check("degree bound at (n, d) = (2, 4)", frac(1, 2), core::bigbound_k(2, 4));

  c.check("effectivity bound at (n, a) = (2, 0)", frac(3, 2),
          core::twist_bound_from_a(2, 0));
  c.check("effectivity bound at (n, a) = (4, 2)", Rational(4),
          core::twist_bound_from_a(4, 2));
  c.check("forced-vanishing ceiling at (n, k) = (2, 1)", Int(-1),
          core::vanishing_twist_ceiling(2, 1));
  c.check("forced-vanishing ceiling at (n, k) = (4, 3)", Int(0),
          core::vanishing_twist_ceiling(4, 3));

  bool all_refuted = true;
  for (int n = 1; n <= 8; ++n)
    all_refuted = all_refuted && core::hypersurface_exclude(n).refuted;
  c.check_true("hypersurfaces excluded for n = 1..8", all_refuted);
  const auto h1 = core::hypersurface_exclude(1);
  const auto h2 = core::hypersurface_exclude(2);
  c.witness("hypersurface n = 1 condition", h1.inequality);
  c.check("hypersurface n = 1 floor", Rational(2), h1.lhs_at_floor);
  c.witness("hypersurface n = 2 condition", h2.inequality);
  c.check("hypersurface n = 2 floor", Rational(2), h2.lhs_at_floor);

  // Primitive proportionality classes (m+1) r = m(2m-2k+1) s.  The Fano
  // index of a 2m-fold that is neither a projective space nor a quadric is
  // at most 2m - 1, so classes with r above that are impossible.
  const std::map<std::pair<long, long>, std::pair<long, long>> table = {
      {{2, 1}, {2, 1}},  {{2, 2}, {2, 3}}, {{3, 1}, {15, 4}},
      {{3, 2}, {9, 4}},  {{3, 3}, {3, 4}},  {{4, 1}, {28, 5}},
      {{4, 2}, {4, 1}},  {{4, 3}, {12, 5}}, {{4, 4}, {4, 5}},
      {{5, 1}, {15, 2}}, {{5, 2}, {35, 6}}, {{5, 3}, {25, 6}},
      {{5, 4}, {5, 2}},  {{5, 5}, {5, 6}}};
  std::vector<std::pair<long, long>> refuted, expected_refuted = {
      {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3}};
  bool spot_ok = true;
  for (const auto& [mk, rs] : table) {
    const auto sol = core::proportional_case(mk.first, mk.second);
    spot_ok = spot_ok && sol.r == rs.first && sol.s == rs.second;
    if (sol.r > 2 * mk.first - 1) refuted.push_back(mk);
  }
  c.check_true("primitive classes match the table for m = 2..5, k <= m",
               spot_ok);
  c.check_true("index cap 2m - 1 rules out exactly "
               "{(3,1), (3,2), (4,1), (4,3), (5,1), (5,2), (5,3)}",
               refuted == expected_refuted);
  const auto p22 = core::proportional_case(2, 2);
  c.check("class at (m, k) = (2, 2): r", Int(2), p22.r);
  c.check("class at (m, k) = (2, 2): s", Int(3), p22.s);
  return c;
}

// ------------------------------- curves ------------------------------------

Certificate quadric_curves_cert(const Options& opt) {
  Certificate c("quadric-curves",
                "curves of type (c+1, 2c+2) on the quadric surface carry an "
                "Ulrich twist k = 2c");
  for (long cc = 1; cc <= opt.max_c; ++cc) {
    std::ostringstream prefix;
    prefix << "c=" << cc << ": ";
    merge(c, curves::certify_quadric_ulrich(cc), prefix.str());
  }

  c.check("type formula at (k, b) = (2, 4)", Rational(2),
          curves::quadric_type_from_k(2, 4));
  c.check("type formula at (k, b) = (6, 8)", Rational(4),
          curves::quadric_type_from_k(6, 8));
  bool family_ok = true;
  for (long cc = 1; cc <= 20; ++cc)
    family_ok = family_ok &&
                curves::quadric_type_from_k(2 * cc, 2 * cc + 2) == cc + 1;
  c.check_true("type formula returns a = c + 1 at b = 2c + 2 for c = 1..20",
               family_ok);
  bool pole_rejected = false;
  try {
    curves::quadric_type_from_k(4, 2);
  } catch (const std::domain_error&) {
    pole_rejected = true;
  }
  c.check_true("pole 3b = k + 2 rejected", pole_rejected);

  const auto t6 = curves::thresholds(6);
  const auto t7 = curves::thresholds(7);
  const auto t8 = curves::thresholds(8);
  c.check("Castelnuovo bound at d = 8", Rational(9), t8.castelnuovo_p3);
  c.check("quadric-forcing threshold at d = 6", Rational(4), t6.quadric_forcing);
  c.check("quadric-forcing threshold at d = 7", Rational(5), t7.quadric_forcing);
  c.check("lower genus bound at d = 6", Rational(3), t6.bd_curve);
  c.check("first family member meets the lower bound: g(c=1)", Rational(3),
          Rational(1 * (2 * 1 + 1)));
  bool exception_only_9 = true;
  for (long d = 4; d <= 60; ++d)
    exception_only_9 =
        exception_only_9 && (curves::thresholds(d).exception_9_10 == (d == 9));
  c.check_true("quadric-forcing exception only at d = 9", exception_only_9);

  c.check("Brill-Noether number at (g, r, d) = (3, 3, 6)", Rational(3),
          curves::brill_noether_rho(3, 3, 6));
  bool rho_iff = true;
  for (long g = 1; g <= 30; ++g)
    for (long d = 1; d <= 30; ++d)
      rho_iff = rho_iff && ((curves::brill_noether_rho(g, 3, d) >= 0) ==
                            (4 * d >= 3 * g + 12));
  c.check_true("rho >= 0 iff 4d >= 3g + 12 at r = 3 (g, d <= 30)", rho_iff);

  bool cone_only_b1 = true;
  for (long b = 1; b <= 200; ++b)
    cone_only_b1 = cone_only_b1 && (curves::cone_case_check(b) == (b == 1));
  c.check_true("cone case admits an integer twist only at b = 1", cone_only_b1);

  bool k2_window = true;
  for (long g = 0; g <= 40; ++g)
    k2_window = k2_window && (curves::existence_k2(g) == (g >= 3));
  c.check_true("twist-2 sections exist exactly for g >= 3", k2_window);
  bool degrees_ok = true;
  for (long g = 3; g <= 40; ++g) {
    const auto d = core::degree_from_genus(1, g, Rational(2));
    degrees_ok = degrees_ok && d && *d == 3 * (g - 1);
  }
  c.check_true("twist-2 degree is 3(g - 1) for g = 3..40", degrees_ok);
  return c;
}

Certificate elliptic_product_cert(const Options& opt) {
  Certificate c("elliptic-product",
                "witness bundles on the elliptic-times-rational product "
                "vanish for every odd twist k >= 3");
  for (long k = 3; k <= opt.k_max; k += 2) {
    std::ostringstream prefix;
    prefix << "k=" << k << ": ";
    merge(c, curves::certify_elliptic_product(k), prefix.str());
  }
  bool even_rejected = false;
  try {
    curves::certify_elliptic_product(4);
  } catch (const std::invalid_argument&) {
    even_rejected = true;
  }
  c.check_true("even twist rejected", even_rejected);

  c.check_true("twist-3 sections exist at g = 9", curves::existence_k3(9));
  c.check_true("twist-3 sections exist at g = 11", curves::existence_k3(11));
  c.check_true("no twist-3 sections at g = 7", !curves::existence_k3(7));
  c.check_true("no twist-3 sections at even g = 8", !curves::existence_k3(8));
  bool window_ok = true;
  for (long g = 0; g <= 41; ++g)
    window_ok = window_ok &&
                (curves::existence_k3(g) == (g >= 9 && g % 2 == 1));
  c.check_true("twist-3 window is odd g >= 9 (g <= 41)", window_ok);
  const auto d = core::degree_from_genus(1, 9, Rational(3));
  c.check_true("degree formula defined at (g, k) = (9, 3)", d.has_value());
  if (d) c.check("twist-3 degree at g = 9", Rational(12), *d);
  return c;
}

Certificate grado_cert(const Options& opt) {
  Certificate c("grado",
                "parameter triples (n, d, g) with (n-1)d = (n+2)(g-1) and "
                "2 <= g <= d - 3");
  const auto triples = dio::feasible_params(opt.d_max);
  c.check("triple count", 1, static_cast<long long>(triples.size()));
  const std::vector<dio::ParamTriple> expected = {{4, 8, 5}};
  c.check_true("only (n, d, g) = (4, 8, 5) survives", triples == expected);
  for (const auto& t : triples) {
    c.check(triple_str(t) + " linear residual", 0,
            static_cast<long long>((t.n - 1) * t.d - (t.n + 2) * (t.g - 1)));
    c.check_true(triple_str(t) + " genus window 2 <= g <= d - 3",
                 2 <= t.g && t.g <= t.d - 3);
    c.check_true(triple_str(t) + " degree at least n + 3", t.d >= t.n + 3);
  }
  c.check_true("no triple below degree 8", dio::feasible_params(7).empty());
  c.witness("degree cap", std::to_string(opt.d_max));
  return c;
}

Certificate surfaces_cert(const Options&) {
  Certificate c("surfaces",
                "surface necessary conditions: degree, canonical and Chern "
                "residuals, and the chi window");
  // Degree-20 anticanonical member (twist 1) and the double plane model
  // (twist 0).
  const auto r1 = core::surface_conditions(20, 6, 1, 1, 5, -10);
  c.check("degree residual (d = 20, k = 1)", Rational(0), r1.degree);
  c.check("canonical residual (d = 20, k = 1)", Rational(0), r1.canonical);
  c.check("Chern residual (d = 20, k = 1)", Rational(0), r1.chern);
  const auto r0 = core::surface_conditions(4, 0, 0, 1, 9, -6);
  c.check("degree residual (d = 4, k = 0)", Rational(0), r0.degree);
  c.check("canonical residual (d = 4, k = 0)", Rational(0), r0.canonical);
  c.check("Chern residual (d = 4, k = 0)", Rational(0), r0.chern);
  c.check("twist from intersections (d, KH) = (4, -6)", Rational(0),
          core::k_from_intersections(2, 4, -6));

  bool round_trip = true;
  for (long k = 0; k <= 6; ++k) {
    const Rational kh = core::canonical_degree_product(2, 20, k);
    round_trip = round_trip && is_integer(kh) &&
                 core::k_from_intersections(2, 20, qexact::to_int(kh)) == k;
  }
  c.check_true("twist/product round trip at d = 20 for k = 0..6", round_trip);

  const auto w2 = core::surface_chi_window(20, 2);
  c.check("window at (d, k) = (20, 2): lower", Rational(0), w2.lower);
  c.check("window at (d, k) = (20, 2): upper", Rational(1), w2.upper);
  const auto w3 = core::surface_chi_window(20, 3);
  c.check("window collapses at k = 3: lower", Rational(5), w3.lower);
  c.check("window collapses at k = 3: upper", Rational(5), w3.upper);
  const auto w4 = core::surface_chi_window(20, 4);
  c.check("window at (d, k) = (20, 4): lower", Rational(15), w4.lower);
  c.check("window at (d, k) = (20, 4): upper", Rational(13), w4.upper);
  c.check_true("window empty at (d, k) = (20, 4)", w4.empty());
  bool collapse_ok = true;
  for (long d = 4; d <= 100; d += 4) {
    const auto w = core::surface_chi_window(d, 3);
    collapse_ok = collapse_ok && w.lower == w.upper &&
                  w.lower == Rational(d) / 4;
  }
  c.check_true("window is the single point chi = d/4 at k = 3", collapse_ok);
  bool empty_ok = true;
  for (long k = 4; k <= 60; ++k)
    for (long d : {4L, 8L, 12L, 20L, 40L, 100L})
      empty_ok = empty_ok && core::surface_chi_window(d, k).empty();
  c.check_true("window empty for every k >= 4 (k <= 60)", empty_ok);

  core::VarietyParams s5;
  s5.n = 2;
  s5.d = 20;
  s5.g = 6;
  s5.k = 1;
  s5.KH = -10;
  s5.K2 = 5;
  s5.c2 = 7;
  s5.chi = 1;
  c.check("consistency identity residual (d = 20)", Rational(0),
          core::c2_identity_residual(s5));
  core::VarietyParams p2 = s5;
  p2.d = 4;
  p2.g = 0;
  p2.k = 0;
  p2.KH = -6;
  p2.K2 = 9;
  p2.c2 = 3;
  c.check("consistency identity residual (d = 4)", Rational(0),
          core::c2_identity_residual(p2));
  core::VarietyParams bad = s5;
  bad.c2 = 8;
  c.check("identity residual detects c2 + 1", Rational(-20),
          core::c2_identity_residual(bad));

  c.check_true("Hodge index d K^2 <= (K.H)^2 tight at d = 20",
               Rational(20 * 5) == Rational((-10) * (-10)));
  c.check_true("Bogomolov K^2 <= 4 c2", Rational(5) <= Rational(4 * 7));
  c.check_true("sectional genus consistent", core::genus_consistent(s5));
  return c;
}

}  // namespace

const std::vector<std::string>& ids() {
  static const std::vector<std::string> all = {
      "conto",        "632num",         "632",
      "k1-surface",   "hilbert-3d",     "hilbert-4d",
      "hilbert-4e",   "noqf4",          "nosc4",
      "bound",        "quadric-curves", "elliptic-product",
      "grado",        "surfaces"};
  return all;
}

std::string describe(const std::string& id) {
  static const std::map<std::string, std::string> d = {
      {"conto",
       "solve a^2 - 6a + 4 = c1^2 + c2^2 + c3^2 + c4^2 with descending c_i "
       "and a >= c1 + c2 + 3; four solutions"},
      {"632num",
       "solve a^2 - sum b_i^2 = 10, 3a - sum b_i = 6 over six descending "
       "integers; five classes"},
      {"632",
       "check the five sextic models on the six-point blowup: degree, "
       "self-intersection, genus, and 3K + 2X never effective"},
      {"k1-surface",
       "map twist-1 surface polarizations to the four-point blowup; verify "
       "H^2 = -2 H.K, ampleness of -2K, and the section counts"},
      {"hilbert-3d",
       "pin the degree-8 constrained Hilbert polynomial (roots 1,2,3,5,10,15) "
       "and refute by the sign of the leading coefficient"},
      {"hilbert-4d",
       "pin the degree-10 constrained Hilbert polynomial (roots "
       "1,2,3,4,6,8,10) with the imported c2 ratio and refute by sign"},
      {"hilbert-4e",
       "pin the degree-10 constrained Hilbert polynomial (roots "
       "1,2,3,4,6,12,18,24) and refute by integrality of A^10"},
      {"noqf4",
       "refute the quadric fibration over a curve in dimension four: "
       "13 d = 48 (e+2) admits no allowed e"},
      {"nosc4",
       "refute the conic bundle over a surface in dimension four: "
       "integrality forces d >= 48, semistability d <= 24"},
      {"bound",
       "twist bounds: k_max = n+1 for n <= 12, degree bound, effectivity "
       "thresholds, hypersurface and proportional exclusions"},
      {"quadric-curves",
       "curves of type (c+1, 2c+2) on the quadric: degree 3(c+1), genus "
       "bound attained, six cohomology vanishings"},
      {"elliptic-product",
       "witness-bundle vanishing on the elliptic-times-rational product for "
       "odd twists k >= 3"},
      {"grado",
       "enumerate (n, d, g) with (n-1)d = (n+2)(g-1) and 2 <= g <= d-3; "
       "only (4, 8, 5) survives"},
      {"surfaces",
       "surface necessary conditions: residuals, consistency identity, and "
       "the chi window (point at k = 3, empty for k >= 4)"},
  };
  const auto it = d.find(id);
  if (it == d.end()) throw std::invalid_argument("unknown certificate id: " + id);
  return it->second;
}

Certificate run(const std::string& id, const Options& opt) {
  using Builder = Certificate (*)(const Options&);
  static const std::map<std::string, Builder> builders = {
      {"conto", conto_cert},
      {"632num", num632_cert},
      {"632", model632_cert},
      {"k1-surface", k1_surface_cert},
      {"hilbert-3d", hilbert3d_cert},
      {"hilbert-4d", hilbert4d_cert},
      {"hilbert-4e", hilbert4e_cert},
      {"noqf4", noqf4_cert},
      {"nosc4", nosc4_cert},
      {"bound", bound_cert},
      {"quadric-curves", quadric_curves_cert},
      {"elliptic-product", elliptic_product_cert},
      {"grado", grado_cert},
      {"surfaces", surfaces_cert},
  };
  const auto it = builders.find(id);
  if (it == builders.end())
    throw std::invalid_argument("unknown certificate id: " + id);
  return it->second(opt);
}

}  // namespace ulrich::certify
