#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/qexact.hpp"

// Necessary numerical conditions for a twisted tangent bundle T_X(k) on an
// n-fold X, polarized by H of degree d with sectional genus g, to be an
// Ulrich bundle.  Everything here is a pure formula or a small exact
// derivation; geometry enters only through the identities themselves.
//
// Conventions: KH denotes K_X.H^{n-1}, K2 denotes K_X^2.H^{n-2}, c2 denotes
// c_2(X).H^{n-2}, chi denotes chi(O_X) (surfaces).  The sectional-genus
// relation is 2g - 2 = KH + (n-1)d.

namespace ulrich::core {

using qexact::AffineExpr;
using qexact::Int;
using qexact::Rational;

struct VarietyParams {
  int n = 1;        // dimension, >= 1
  Int d = 1;        // degree H^n, >= 1
  Int g = 0;        // sectional genus
  Int k = 0;        // twist
  std::optional<Int> KH;
  std::optional<Int> K2;
  std::optional<Int> c2;
  std::optional<Int> chi;
};

// True when KH is absent or matches g through 2g - 2 = KH + (n-1)d.
bool genus_consistent(const VarietyParams& p);

// KH from the sectional-genus relation when not stored explicitly.
Int effective_KH(const VarietyParams& p);

// d = (n+2)(g-1)/(nk-1); empty in the degenerate case nk = 1.
std::optional<Rational> degree_from_genus(int n, const Int& g, const Rational& k);

// k = (n+1)/2 + (n+2)/(2nd) * KH.
Rational k_from_intersections(int n, const Int& d, const Int& KH);

// KH^{n-1} = n(2k-n-1)d/(n+2), the inverse of k_from_intersections.
Rational canonical_degree_product(int n, const Int& d, const Int& k);

// chi(E(m)) = rd/n! * (m+1)(m+2)...(m+n) for an Ulrich bundle of rank r.
Rational ulrich_euler(int n, const Int& d, const Int& r, const Int& m);

// First and (when computable) second Chern products of a rank-r Ulrich
// bundle: c1H = r(d+g-1); c2H for bundles whose first Chern class is carried
// by K_X + (n+1)H (tangent twists under a proportional polarization), which
// needs n >= 2 and both K2 and c2.
struct ChernProducts {
  Rational c1H;
  std::optional<Rational> c2H;
};
ChernProducts ulrich_chern(const VarietyParams& p, const Int& r);

// Residual of the degree-6 consistency identity tying d, K2 and c2:
//   (12kn - 12k^2 + 12k - 3n^2 - 5n - 2) n d + 2(n+12) K2 + 2(n-12) c2.
// Zero is a necessary condition; the residual is linear in (d, K2, c2).
Rational c2_identity_residual(const VarietyParams& p);

// Largest k with 4nk^2 - 4n(n+1)k - 3n^2 - 7n - 4 <= 0.  The derivation of
// this bound needs n <= 12; for larger n the value is still returned with
// derivation_valid = false.
struct TwistBound {
  Int k_max;
  bool derivation_valid;
};
TwistBound bou_max_k(int n);

// k <= ((n+2)(d-4)+4)/(4n); returned as the exact right-hand side.
Rational bigbound_k(int n, const Int& d);

// k <= a(n+2)/(2n) + (n+1)/2 where a = a(X,H) is the smallest l with
// lH - K_X effective; the caller supplies a.
Rational twist_bound_from_a(int n, const Rational& a);

// ceil(n(2k-n-1)/(n+2)) - 1, the largest twist whose section space is forced
// to vanish in the effectivity argument.
Int vanishing_twist_ceiling(int n, const Int& k);

// Residuals of the three surface conditions (n = 2); all must vanish:
//   (i)  d - 4(g-1)/(2k-1)        (degenerate 2k = 1 never occurs, k integer)
//   (ii) HK - (2k-3)d/2
//   (iii) K2 - 5chi - (k-1)(k-2)d/2
struct SurfaceResiduals {
  Rational degree;
  Rational canonical;
  Rational chern;
  bool all_zero() const { return degree == 0 && canonical == 0 && chern == 0; }
};
SurfaceResiduals surface_conditions(const Int& d, const Int& g, const Int& k,
                                    const Int& chi, const Int& K2, const Int& HK);

// Window (k^2-3k+2)d/8 <= chi <= (2k^2-6k+5)d/20 for surfaces; empty for all
// k >= 4, equal bounds at k = 3.
struct ChiWindow {
  Rational lower;
  Rational upper;
  bool empty() const { return lower > upper; }
};
ChiWindow surface_chi_window(const Int& d, const Int& k);

// Hypersurfaces in P^{n+1} admit no Ulrich tangent twist.  For n >= 2 the
// section-vanishing requirement collapses to k(n-2) + n <= 0, false for all
// k >= 0; for n = 1 it collapses to d <= 1 against d >= 2.
struct HypersurfaceExclusion {
  int n;
  std::string inequality;   // the condition that would have to hold
  Rational lhs_at_floor;    // its left side at the extreme admissible point
  bool refuted;             // true: no k (resp. no d) satisfies it
};
HypersurfaceExclusion hypersurface_exclude(int n);

// Primitive integer solution of (m+1) r = m(2m-2k+1) s with s > 0.  Any
// integer solution is a multiple of it, so |r0| divides r throughout; the
// `primitive` flag is true when no common factor was cancelled, i.e. the
// full coefficient m(2m-2k+1) already divides r.
struct ProportionalSolution {
  Int r;
  Int s;
  bool primitive;
};
ProportionalSolution proportional_case(const Int& m, const Int& k);

// Exact refutation of a fibration scenario: a list of derived identities in
// named parameters plus the contradiction they produce.
struct FibrationCertificate {
  enum class Contradiction { Sign, Integrality, Divisibility, IntervalEmpty };
  std::string id;
  std::vector<std::pair<std::string, AffineExpr>> identities;
  Contradiction kind;
  std::vector<std::pair<std::string, std::string>> notes;
  static std::string kind_name(Contradiction c);
};

// Four-dimensional quadric fibration over a curve: solves the five
// intersection-number equations in (H^4, KH^3, K^2H^2, K^3H, K^4) with the
// section count e and base invariant b symbolic, then derives
// 13 d = 48 (e+2) and refutes by divisibility (e <= 5 leaves no multiple
// of 13 in [1, 7]).
FibrationCertificate noqf4_certify();

// Four-dimensional conic bundle over a surface: solves the five linear
// identities in (K_B^2, K_B.c1, c1^2, c2(F), chi(O_S)) with the degree d
// symbolic, then plays integrality of K_B^2 (48 | d, so d >= 48) against
// semistability of the tangent slope (d <= 24).
FibrationCertificate nosc4_certify();

}  // namespace ulrich::core
