#include "ulrich/ulrich_core.hpp"

#include <stdexcept>

#include "ulrich/qexact.hpp"

namespace ulrich::core {

using qexact::frac;
using qexact::QMatrix;
using qexact::solve_linear;

namespace {

Rational rat(long v) { return Rational(v); }

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

bool genus_consistent(const VarietyParams& p) {
  if (!p.KH) return true;
  return 2 * p.g - 2 == *p.KH + (p.n - 1) * p.d;
}

Int effective_KH(const VarietyParams& p) {
  if (p.KH) return *p.KH;
  return 2 * p.g - 2 - (p.n - 1) * p.d;
}

std::optional<Rational> degree_from_genus(int n, const Int& g, const Rational& k) {
  require(n >= 1, "degree_from_genus: n >= 1");
  const Rational denom = rat(n) * k - 1;
  if (denom == 0) return std::nullopt;
  return Rational(n + 2) * Rational(g - 1) / denom;
}

Rational k_from_intersections(int n, const Int& d, const Int& KH) {
  require(n >= 1 && d >= 1, "k_from_intersections: n >= 1, d >= 1");
  return frac(n + 1, 2) + frac(n + 2, 2 * n) * Rational(KH) / Rational(d);
}

Rational canonical_degree_product(int n, const Int& d, const Int& k) {
  require(n >= 1, "canonical_degree_product: n >= 1");
  return frac(n, n + 2) * Rational(2 * k - n - 1) * Rational(d);
}

Rational ulrich_euler(int n, const Int& d, const Int& r, const Int& m) {
  require(n >= 1 && d >= 1 && r >= 0, "ulrich_euler: n >= 1, d >= 1, r >= 0");
  Rational acc = Rational(r * d) / Rational(factorial(n));
  for (int i = 1; i <= n; ++i) acc *= Rational(m + i);
  return acc;
}

ChernProducts ulrich_chern(const VarietyParams& p, const Int& r) {
  require(r >= 0, "ulrich_chern: r >= 0");
  if (r == 0) return {rat(0), rat(0)};  // zero sheaf: both products vanish

  ChernProducts out;
  out.c1H = Rational(r) * Rational(p.d + p.g - 1);
  if (p.n >= 2 && p.K2 && p.c2) {
    const Rational KH(effective_KH(p));
    const Rational K2(*p.K2), c2(*p.c2), d(p.d), rr(r);
    const Rational np1(p.n + 1);
    // c1 carried by K + (n+1)H with weight r/2:
    const Rational c1sq = rr * rr / 4 * (K2 + 2 * np1 * KH + np1 * np1 * d);
    const Rational c1K = rr / 2 * (K2 + np1 * KH);
    const Rational topological =
        rr / 12 * (K2 + c2 - frac(3 * p.n * p.n + 5 * p.n + 2, 2) * d);
    out.c2H = (c1sq - c1K) / 2 + topological;
  }
  return out;
}

Rational c2_identity_residual(const VarietyParams& p) {
  require(p.K2 && p.c2, "c2_identity_residual: K2 and c2 required");
  require(p.n >= 2, "c2_identity_residual: n >= 2");
  const Rational n(p.n), k(p.k);
  const Rational dcoef = (12 * k * n - 12 * k * k + 12 * k - 3 * n * n - 5 * n - 2) * n;
  return dcoef * Rational(p.d) + 2 * (n + 12) * Rational(*p.K2) +
         2 * (n - 12) * Rational(*p.c2);
}

TwistBound bou_max_k(int n) {
  require(n >= 2, "bou_max_k: n >= 2");
  // q(k) = 4nk^2 - 4n(n+1)k - (3n^2+7n+4); q(0) < 0 and the satisfying set
  // is an interval, so an upward scan finds the top.  The larger root is
  // (n+1)/2 + (n+2)sqrt(n(n+1))/(2n) < 2n+4.
  auto q = [n](long k) -> Int {
    return Int(4) * n * k * k - Int(4) * n * (n + 1) * k - (Int(3) * n * n + 7 * n + 4);
  };
  Int best = 0;
  for (long k = 0; k <= 2L * n + 4; ++k)
    if (q(k) <= 0) best = k;
  return {best, n <= 12};
}

Rational bigbound_k(int n, const Int& d) {
  require(n >= 1, "bigbound_k: n >= 1");
  return Rational((n + 2) * (d - 4) + 4) / Rational(4 * n);
}

Rational twist_bound_from_a(int n, const Rational& a) {
  require(n >= 1, "twist_bound_from_a: n >= 1");
  return a * frac(n + 2, 2 * n) + frac(n + 1, 2);
}

Int vanishing_twist_ceiling(int n, const Int& k) {
  require(n >= 1, "vanishing_twist_ceiling: n >= 1");
  const Int num = n * (2 * k - n - 1);
  Int q;
  mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n + 2));
  return q - 1;
}

SurfaceResiduals surface_conditions(const Int& d, const Int& g, const Int& k,
                                    const Int& chi, const Int& K2, const Int& HK) {
  SurfaceResiduals r;
  r.degree = Rational(d) - Rational(4 * (g - 1)) / Rational(2 * k - 1);
  r.canonical = Rational(HK) - Rational((2 * k - 3) * d) / 2;
  r.chern = Rational(K2) - Rational(5 * chi) - Rational((k - 1) * (k - 2) * d) / 2;
  return r;
}

ChiWindow surface_chi_window(const Int& d, const Int& k) {
  ChiWindow w;
  w.lower = Rational((k * k - 3 * k + 2) * d) / 8;
  w.upper = Rational((2 * k * k - 6 * k + 5) * d) / 20;
  return w;
}

HypersurfaceExclusion hypersurface_exclude(int n) {
  require(n >= 1, "hypersurface_exclude: n >= 1");
  if (n == 1) {
    // k = (3d-7)/2 forces (d-3)/2 <= -1, i.e. d <= 1, but a hypersurface
    // curve that is not a line has d >= 2.
    return {n, "d <= 1", rat(2), true};
  }
  // Section vanishing forces k(n-2) + n <= 0; the left side is minimized
  // over k >= 0 at k = 0 where it equals n > 0.
  return {n, "k(n-2) + n <= 0", rat(n), true};
}

ProportionalSolution proportional_case(const Int& m, const Int& k) {
  require(m >= 1, "proportional_case: m >= 1");
  const Int num = m * (2 * m - 2 * k + 1);
  const Int den = m + 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return {num / g, den / g, g == 1};
}

std::string FibrationCertificate::kind_name(Contradiction c) {
  switch (c) {
    case Contradiction::Sign: return "sign";
    case Contradiction::Integrality: return "integrality";
    case Contradiction::Divisibility: return "divisibility";
    case Contradiction::IntervalEmpty: return "interval-empty";
  }
  return "?";
}

FibrationCertificate noqf4_certify() {
  // Unknowns x0..x4 = (H^4, K.H^3, K^2.H^2, K^3.H, K^4); e and b are kept
  // symbolic as trailing columns.  Rows expand (K+2H)^i-type products:
  //   16x0+32x1+24x2+8x3+x4 = 2e - b
  //   8x1+12x2+6x3+x4      = -4e + b - 4
  //   4x2+4x3+x4           = 6e + 3b + 24
  //   2x3+x4               = -27b - 108
  //   x4                   = -54e + 135b + 432
  const QMatrix a = QMatrix::from_rows({
      {16, 32, 24, 8, 1, -2, 1},
      {0, 8, 12, 6, 1, 4, -1},
      {0, 0, 4, 4, 1, -6, -3},
      {0, 0, 0, 2, 1, 0, 27},
      {0, 0, 0, 0, 1, 54, -135},
  });
  const std::vector<Rational> rhs{rat(0), rat(-4), rat(24), rat(-108), rat(432)};
  const auto sol = solve_linear(a, rhs);
  if (sol.kind != qexact::LinearSolution::Kind::Parametric)
    throw std::logic_error("noqf4_certify: expected a parametric solution");

  const std::vector<std::string> params{"e", "b"};
  FibrationCertificate fc;
  fc.id = "noqf4";
  const AffineExpr d_expr = affine_of(sol, 0, params);
  const AffineExpr kh3_expr = affine_of(sol, 1, params);
  fc.identities.emplace_back("H^4", d_expr);
  fc.identities.emplace_back("K.H^3", kh3_expr);
  fc.identities.emplace_back("K^2.H^2", affine_of(sol, 2, params));
  fc.identities.emplace_back("K^3.H", affine_of(sol, 3, params));
  fc.identities.emplace_back("K^4", affine_of(sol, 4, params));

  // The twist formula at (n,k) = (4,2) demands K.H^3 = -2/3 d.  Substitute
  // b = (d-64)/16 from the H^4 row and clear denominators; what remains is
  // 13d - 48(e+2) = 0.
  const Rational slope = canonical_degree_product(4, 1, 2);  // -2/3
  AffineExpr gap = kh3_expr - d_expr.scaled(slope);          // in (e, b)
  const Rational b_coef = gap.coeffs.count("b") ? gap.coeffs.at("b") : rat(0);
  AffineExpr b_from_d =
      (AffineExpr::variable("d") - AffineExpr::constant_term(rat(64))).scaled(frac(1, 16));
  gap = gap - AffineExpr::variable("b").scaled(b_coef) + b_from_d.scaled(b_coef);
  // Normalize so the coefficient of d is +13.
  gap = gap.scaled(Rational(13) / gap.coeffs.at("d"));
  fc.identities.emplace_back("required: 13d - 48(e+2) = 0", gap);

  // e = sum of five ramification contributions, each at most 1, so e <= 5
  // and e+2 ranges over [1, 7] (positivity of d forces e+2 >= 1).  No value
  // in that range is divisible by 13.
  fc.kind = FibrationCertificate::Contradiction::Divisibility;
  fc.notes.emplace_back("e range", "e <= 5, e+2 >= 1");
  bool any = false;
  for (int e2 = 1; e2 <= 7; ++e2) any = any || (e2 % 13 == 0);
  fc.notes.emplace_back("multiples of 13 in [1,7]", any ? "present" : "none");
  if (any) fc.notes.emplace_back("refutation", "FAILED: a multiple of 13 exists");
  return fc;
}

FibrationCertificate nosc4_certify() {
  // Unknowns (K_B^2, K_B.c1, c1^2, c2(F), chi(O_S)) with the degree d
  // symbolic in the trailing column:
  //   -6x0 + 4x1 - 6x2 + 16x3        + d   = 0
  //          x1 -  x2 +  2x3 + 2x4         = 8
  //    x0       +  x2 -  3x3               = 1
  //   3x0       +  x2 -  2x3               = 30
  //  9/4x0 - x1 + 7/4x2 - 5x3 - x4 + d/6   = -4
  const QMatrix a = QMatrix::from_rows({
      {-6, 4, -6, 16, 0, 1},
      {0, 1, -1, 2, 2, 0},
      {1, 0, 1, -3, 0, 0},
      {3, 0, 1, -2, 0, 0},
      {frac(9, 4), -1, frac(7, 4), -5, -1, frac(1, 6)},
  });
  const std::vector<Rational> rhs{rat(0), rat(8), rat(1), rat(30), rat(-4)};
  const auto sol = solve_linear(a, rhs);
  if (sol.kind != qexact::LinearSolution::Kind::Parametric)
    throw std::logic_error("nosc4_certify: expected a parametric solution");

  const std::vector<std::string> params{"d"};
  FibrationCertificate fc;
  fc.id = "nosc4";
  const AffineExpr kb2 = affine_of(sol, 0, params);
  const AffineExpr kbc1 = affine_of(sol, 1, params);
  fc.identities.emplace_back("K_B^2", kb2);
  fc.identities.emplace_back("K_B.c1", kbc1);
  fc.identities.emplace_back("c1^2", affine_of(sol, 2, params));
  fc.identities.emplace_back("c2(F)", affine_of(sol, 3, params));
  fc.identities.emplace_back("chi(O_S)", affine_of(sol, 4, params));

  // Tangent slope from K.H^3 = -2/3 d at (n,k) = (4,2): mu(T_X) = d/6.
  const Rational slope = canonical_degree_product(4, 1, 2);  // -2/3
  const AffineExpr mu_tx = AffineExpr::variable("d").scaled(-slope / 4);
  // Pulled-back slope mu(pi*T_B) = -K_B.c1 + 3K_B^2.
  const AffineExpr mu_tb = kbc1.scaled(rat(-1)) + kb2.scaled(rat(3));
  fc.identities.emplace_back("mu(T_X)", mu_tx);
  fc.identities.emplace_back("mu(pi*T_B)", mu_tb);

  // Integrality: K_B^2 = 7 - 7d/48 is an integer, and gcd(7,48) = 1, so
  // 48 | d and d >= 48.  Semistability: mu(T_X) <= mu(pi*T_B) gives
  // d/6 <= 12 - d/3, i.e. d <= 24.  The interval [48, 24] is empty.
  fc.kind = FibrationCertificate::Contradiction::IntervalEmpty;
  const Rational dcoef = -kb2.coeffs.at("d");  // 7/48
  fc.notes.emplace_back("integrality",
                        "48 | d from K_B^2 (coefficient " + qexact::to_string(dcoef) +
                            "), so d >= 48");
  // Upper bound from mu(T_X) <= mu(pi*T_B): solve the affine inequality.
  const AffineExpr slack = mu_tb - mu_tx;  // 12 - d/2
  const Rational d_max = -slack.constant / slack.coeffs.at("d");
  fc.notes.emplace_back("semistability", "d <= " + qexact::to_string(d_max));
  fc.notes.emplace_back("interval", d_max < 48 ? "[48, " + qexact::to_string(d_max) + "] empty"
                                               : "FAILED: interval nonempty");
  return fc;
}

}  // namespace ulrich::core
