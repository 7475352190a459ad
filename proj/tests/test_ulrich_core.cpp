#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "ulrich/ulrich_core.hpp"

using namespace ulrich::core;
using ulrich::qexact::AffineExpr;
using ulrich::qexact::frac;
using ulrich::qexact::Int;
using ulrich::qexact::Rational;

namespace {

VarietyParams surface_k1() {
  VarietyParams p;
  p.n = 2;
  p.d = 20;
  p.g = 6;
  p.k = 1;
  p.KH = -10;
  p.K2 = 5;
  p.c2 = 7;
  p.chi = 1;
  return p;
}

VarietyParams plane_conic_polarization() {
  VarietyParams p;
  p.n = 2;
  p.d = 4;
  p.g = 0;
  p.k = 0;
  p.KH = -6;
  p.K2 = 9;
  p.c2 = 3;
  p.chi = 1;
  return p;
}

// Exact ceil(p/q) for q > 0 without library helpers.
Int ceil_div(const Int& p, const Int& q) {
  Int quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return rem == 0 ? quo : quo + 1;
}

}  // namespace

TEST_CASE("genus relation and KH derivation") {
  CHECK(genus_consistent(surface_k1()));
  CHECK(genus_consistent(plane_conic_polarization()));
  VarietyParams p = surface_k1();
  p.KH = -9;
  CHECK(!genus_consistent(p));
  p.KH.reset();
  CHECK(genus_consistent(p));  // nothing to contradict
  CHECK(effective_KH(p) == -10);
  CHECK(effective_KH(surface_k1()) == -10);
}

TEST_CASE("degree_from_genus and its degenerate case") {
  CHECK(degree_from_genus(2, 6, Rational(1)) == Rational(20));
  CHECK(degree_from_genus(1, 3, Rational(2)) == Rational(6));
  CHECK(degree_from_genus(1, 9, Rational(3)) == Rational(12));
  CHECK(!degree_from_genus(1, 5, Rational(1)).has_value());  // nk = 1
  CHECK(!degree_from_genus(2, 5, frac(1, 2)).has_value());
}

TEST_CASE("twist and canonical product invert each other") {
  CHECK(k_from_intersections(2, 20, -10) == 1);
  CHECK(k_from_intersections(2, 4, -6) == 0);
  CHECK(canonical_degree_product(2, 20, 1) == -10);
  CHECK(canonical_degree_product(4, 1, 2) == frac(-2, 3));
  CHECK(canonical_degree_product(4, 48, 2) == -32);
  for (int n = 1; n <= 6; ++n)
    for (long d = 1; d <= 24; ++d)
      for (long k = -2; k <= 6; ++k) {
        const Rational kh = canonical_degree_product(n, d, k);
        // Invert: k = (n+1)/2 + (n+2)/(2nd) * KH, with KH rational here.
        const Rational back =
            Rational(n + 1) / 2 + Rational(n + 2) / Rational(2 * n * d) * kh;
        CHECK(back == k);
      }
}

TEST_CASE("ulrich_euler vanishes at the interior twists and equals rd at 0") {
  CHECK(ulrich_euler(2, 20, 2, 0) == 40);
  CHECK(ulrich_euler(2, 20, 2, -1) == 0);
  CHECK(ulrich_euler(2, 20, 2, -2) == 0);
  for (int n = 1; n <= 5; ++n)
    for (long d : {1L, 6L, 20L})
      for (long r : {1L, 2L, 3L}) {
        CHECK(ulrich_euler(n, d, r, 0) == Rational(r * d));
        for (long m = -n; m <= -1; ++m)
          CHECK(ulrich_euler(n, d, r, m) == 0);
        CHECK(ulrich_euler(n, d, r, -n - 1) != 0);
      }
}

TEST_CASE("ulrich_chern products") {
  const auto ch = ulrich_chern(surface_k1(), 2);
  CHECK(ch.c1H == 50);  // r (d + g - 1)
  REQUIRE(ch.c2H.has_value());
  CHECK(*ch.c2H == 37);
  // Independent route on a surface: c2(T(k)) = c2 - k K.H + k^2 d.
  CHECK(*ch.c2H == Rational(7) - Rational(-10) + Rational(20));

  const auto ch0 = ulrich_chern(plane_conic_polarization(), 2);
  CHECK(ch0.c1H == 6);
  REQUIRE(ch0.c2H.has_value());
  CHECK(*ch0.c2H == 3);  // k = 0: c2 of the tangent bundle itself

  const auto trivial = ulrich_chern(surface_k1(), 0);
  CHECK(trivial.c1H == 0);
  REQUIRE(trivial.c2H.has_value());
  CHECK(*trivial.c2H == 0);

  VarietyParams incomplete = surface_k1();
  incomplete.K2.reset();
  CHECK(!ulrich_chern(incomplete, 2).c2H.has_value());
}

TEST_CASE("degree-six consistency identity") {
  CHECK(c2_identity_residual(surface_k1()) == 0);
  CHECK(c2_identity_residual(plane_conic_polarization()) == 0);

  // The residual is affine-linear in each of d, K2, c2 with the advertised
  // coefficients 2(n+12) and 2(n-12).
  for (int n : {2, 4, 10}) {
    VarietyParams p;
    p.n = n;
    p.d = 6;
    p.g = 0;
    p.k = 3;
    p.K2 = 5;
    p.c2 = 7;
    const Rational base = c2_identity_residual(p);
    VarietyParams q = p;
    q.K2 = *p.K2 + 1;
    CHECK(c2_identity_residual(q) - base == Rational(2 * (n + 12)));
    q = p;
    q.c2 = *p.c2 + 1;
    CHECK(c2_identity_residual(q) - base == Rational(2 * (n - 12)));
    q = p;
    q.d = p.d + 1;
    const Rational slope_d = c2_identity_residual(q) - base;
    q.d = p.d + 2;
    CHECK(c2_identity_residual(q) - base == 2 * slope_d);  // linear in d
  }

  VarietyParams bad = surface_k1();
  bad.c2 = 8;
  CHECK(c2_identity_residual(bad) == -20);
}

TEST_CASE("dimension-quadratic twist bound") {
  const auto q = [](long n, const Int& k) -> Rational {
    const Int kk = k * k;
    return Rational(4 * n) * Rational(kk) - Rational(4 * n * (n + 1)) * Rational(k) -
           Rational(3 * n * n + 7 * n + 4);
  };
  for (int n = 2; n <= 12; ++n) {
    const auto tb = bou_max_k(n);
    CHECK(tb.derivation_valid);
    CHECK(tb.k_max == n + 1);
    CHECK(q(n, tb.k_max) <= 0);
    CHECK(q(n, tb.k_max + 1) > 0);
  }
  CHECK(bou_max_k(2).k_max == 3);
  CHECK(bou_max_k(12).k_max == 13);
  CHECK(!bou_max_k(13).derivation_valid);
}

TEST_CASE("degree twist bound") {
  CHECK(bigbound_k(1, 1) == frac(-5, 4));
  CHECK(bigbound_k(1, 6) == frac(5, 2));
  CHECK(bigbound_k(2, 4) == frac(1, 2));
  CHECK(bigbound_k(2, 20) == frac(17, 2));
  // Increasing in d, decreasing in n for fixed small d.
  for (int n = 1; n <= 6; ++n)
    for (long d = 2; d <= 30; ++d)
      CHECK(bigbound_k(n, d) > bigbound_k(n, d - 1));
}

TEST_CASE("effectivity-threshold twist bound") {
  CHECK(twist_bound_from_a(2, 0) == frac(3, 2));
  CHECK(twist_bound_from_a(4, 2) == 4);
  for (int n = 1; n <= 6; ++n)
    CHECK(twist_bound_from_a(n, 3) - twist_bound_from_a(n, 1) ==
          Rational(n + 2) / Rational(n));  // slope (n+2)/(2n) per unit a
}

TEST_CASE("forced-vanishing ceiling matches exact ceiling arithmetic") {
  CHECK(vanishing_twist_ceiling(2, 1) == -1);
  CHECK(vanishing_twist_ceiling(4, 3) == 0);
  for (int n = 1; n <= 10; ++n)
    for (long k = -3; k <= 10; ++k) {
      const Int expect = ceil_div(Int(n) * (2 * k - n - 1), Int(n + 2)) - 1;
      CHECK(vanishing_twist_ceiling(n, k) == expect);
    }
}

TEST_CASE("surface conditions") {
  CHECK(surface_conditions(20, 6, 1, 1, 5, -10).all_zero());
  CHECK(surface_conditions(4, 0, 0, 1, 9, -6).all_zero());
  const auto off = surface_conditions(20, 6, 1, 1, 6, -10);
  CHECK(!off.all_zero());
  CHECK(off.degree == 0);
  CHECK(off.canonical == 0);
  CHECK(off.chern == 1);  // K2 enters condition (iii) with coefficient 1
}

TEST_CASE("surface chi window collapses at k = 3 and empties beyond") {
  const auto w1 = surface_chi_window(20, 1);
  CHECK(w1.lower == 0);
  CHECK(w1.upper == 1);
  CHECK(!w1.empty());
  const auto w3 = surface_chi_window(28, 3);
  CHECK(w3.lower == 7);
  CHECK(w3.upper == 7);
  for (long d = 1; d <= 200; ++d) {
    const auto w = surface_chi_window(d, 3);
    CHECK(w.lower == w.upper);
    CHECK(w.lower == frac(d, 4));
  }
  for (long k = 4; k <= 100; ++k)
    for (long d = 1; d <= 200; ++d)
      CHECK(surface_chi_window(d, k).empty());
  for (long k = 0; k <= 3; ++k)
    for (long d = 1; d <= 200; ++d)
      CHECK(!surface_chi_window(d, k).empty());
}

TEST_CASE("hypersurface exclusion") {
  for (int n = 1; n <= 8; ++n) {
    const auto h = hypersurface_exclude(n);
    CHECK(h.refuted);
    CHECK(h.n == n);
  }
  CHECK(hypersurface_exclude(1).inequality == "d <= 1");
  CHECK(hypersurface_exclude(1).lhs_at_floor == 2);
  CHECK(hypersurface_exclude(2).inequality == "k(n-2) + n <= 0");
  CHECK(hypersurface_exclude(2).lhs_at_floor == 2);
  CHECK(hypersurface_exclude(5).lhs_at_floor == 5);
}

TEST_CASE("proportionality classes") {
  const std::map<std::pair<long, long>, std::pair<long, long>> table = {
      {{2, 1}, {2, 1}},  {{2, 2}, {2, 3}},  {{3, 1}, {15, 4}},
      {{3, 2}, {9, 4}},  {{3, 3}, {3, 4}},  {{4, 1}, {28, 5}},
      {{4, 2}, {4, 1}},  {{4, 3}, {12, 5}}, {{4, 4}, {4, 5}},
      {{5, 1}, {15, 2}}, {{5, 2}, {35, 6}}, {{5, 3}, {25, 6}},
      {{5, 4}, {5, 2}},  {{5, 5}, {5, 6}}};
  for (const auto& [mk, rs] : table) {
    const auto sol = proportional_case(mk.first, mk.second);
    CHECK(sol.r == rs.first);
    CHECK(sol.s == rs.second);
  }
  for (long m = 1; m <= 8; ++m)
    for (long k = -3; k <= 10; ++k) {
      const auto sol = proportional_case(m, k);
      const Int coeff = Int(m) * (2 * m - 2 * k + 1);
      CHECK(sol.s > 0);
      CHECK(Int(m + 1) * sol.r == coeff * sol.s);  // defining relation
      Int g, ri = sol.r, si = sol.s;
      mpz_gcd(g.get_mpz_t(), ri.get_mpz_t(), si.get_mpz_t());
      CHECK(g == 1);
      // No cancellation happened iff m+1 and the full coefficient are coprime.
      Int mp1 = m + 1, cf = coeff, gc;
      mpz_gcd(gc.get_mpz_t(), mp1.get_mpz_t(), cf.get_mpz_t());
      CHECK(sol.primitive == (gc == 1));
      if (sol.primitive) {
        CHECK(sol.r == coeff);
        CHECK(sol.s == m + 1);
      }
    }
}

TEST_CASE("noqf4: documented identities, divisibility refutation, determinism") {
  const auto fc = noqf4_certify();
  CHECK(fc.kind == FibrationCertificate::Contradiction::Divisibility);
  CHECK(FibrationCertificate::kind_name(fc.kind) == "divisibility");

  std::map<std::string, AffineExpr> by_name(fc.identities.begin(),
                                            fc.identities.end());
  const AffineExpr d64 = AffineExpr::constant_term(64) +
                         AffineExpr::variable("b").scaled(16);
  CHECK(by_name.at("H^4") == d64);
  const AffineExpr kh3 = AffineExpr::constant_term(-104) +
                         AffineExpr::variable("e").scaled(4) +
                         AffineExpr::variable("b").scaled(-28);
  CHECK(by_name.at("K.H^3") == kh3);
  const auto& gap = by_name.at("required: 13d - 48(e+2) = 0");
  CHECK(gap.coeffs.at("d") == 13);
  CHECK(gap.coeffs.at("e") == -48);
  CHECK(gap.constant == -96);
  // The identity forces d = 48(e+2)/13: satisfied by the rational point,
  // missed by every integer d when e + 2 is in [1, 7].
  CHECK(gap.eval({{"d", frac(144, 13)}, {"e", Rational(1)}}) == 0);
  for (long e = -1; e <= 5; ++e) {
    CHECK((48 * (e + 2)) % 13 != 0);
    for (long d = 1; d <= 200; ++d)
      CHECK(gap.eval({{"d", Rational(d)}, {"e", Rational(e)}}) != 0);
  }

  const auto fc2 = noqf4_certify();
  REQUIRE(fc2.identities.size() == fc.identities.size());
  for (std::size_t i = 0; i < fc.identities.size(); ++i) {
    CHECK(fc2.identities[i].first == fc.identities[i].first);
    CHECK(fc2.identities[i].second == fc.identities[i].second);
  }
  CHECK(fc2.notes == fc.notes);
}

TEST_CASE("nosc4: documented identities, empty interval, determinism") {
  const auto fc = nosc4_certify();
  CHECK(fc.kind == FibrationCertificate::Contradiction::IntervalEmpty);

  std::map<std::string, AffineExpr> by_name(fc.identities.begin(),
                                            fc.identities.end());
  const auto d = AffineExpr::variable("d");
  CHECK(by_name.at("K_B^2") ==
        AffineExpr::constant_term(7) + d.scaled(frac(-7, 48)));
  CHECK(by_name.at("K_B.c1") ==
        AffineExpr::constant_term(9) + d.scaled(frac(-5, 48)));
  CHECK(by_name.at("c1^2") ==
        AffineExpr::constant_term(39) + d.scaled(frac(49, 48)));
  CHECK(by_name.at("c2(F)") ==
        AffineExpr::constant_term(15) + d.scaled(frac(7, 24)));
  CHECK(by_name.at("chi(O_S)") ==
        AffineExpr::constant_term(4) + d.scaled(frac(13, 48)));
  CHECK(by_name.at("mu(T_X)") == d.scaled(frac(1, 6)));
  CHECK(by_name.at("mu(pi*T_B)") ==
        AffineExpr::constant_term(12) + d.scaled(frac(-1, 3)));

  CHECK(by_name.at("K_B^2").eval({{"d", 48}}) == 0);
  CHECK(by_name.at("K_B^2").eval({{"d", 24}}) == frac(7, 2));
  // Semistability threshold: mu(pi*T_B) - mu(T_X) >= 0 iff d <= 24.
  CHECK(by_name.at("mu(pi*T_B)").eval({{"d", 24}}) ==
        by_name.at("mu(T_X)").eval({{"d", 24}}));

  const auto fc2 = nosc4_certify();
  REQUIRE(fc2.identities.size() == fc.identities.size());
  for (std::size_t i = 0; i < fc.identities.size(); ++i)
    CHECK(fc2.identities[i].second == fc.identities[i].second);
  CHECK(fc2.notes == fc.notes);
}
