#pragma once

#include <array>
#include <vector>

#include "ulrich/certificate.hpp"
#include "ulrich/qexact.hpp"

// Cohomology bookkeeping on products of curves (Kunneth) and the numeric
// thresholds appearing for curve sections: Castelnuovo-type genus bounds,
// Brill-Noether numbers, and the small existence windows for twists 2 and 3.

namespace ulrich::curves {

using qexact::Int;
using qexact::Rational;

// Line bundle on one curve factor.  On a rational line, degree determines
// cohomology; on an elliptic curve, degree 0 splits into the trivial bundle
// (h0 = h1 = 1) and nontrivial ones (h0 = h1 = 0).
struct FactorBundle {
  enum class Kind { RationalLine, Elliptic };
  Kind kind = Kind::RationalLine;
  Int degree = 0;
  bool nontrivial = false;  // elliptic degree 0 only

  std::array<Int, 2> h() const;  // (h0, h1)
};

// Kunneth: h^i of the box product, i = 0, 1, 2.
std::array<Int, 3> kunneth_h(const FactorBundle& f1, const FactorBundle& f2);

// Curve of type (a, b) = (c+1, 2c+2) on the smooth quadric surface carries
// an Ulrich twist k = 2c: degree 3(c+1), genus c(2c+1), the genus bound
// (sqrt(8g+1)-1)/2 is attained, and the six Kunneth vanishings of
// O(c,-1) and O(-1,-2c-3) hold.
cert::Certificate certify_quadric_ulrich(const Int& c);

// Abelian-times-rational threefold section: for odd k >= 3 both witness
// bundles L - H1 and L - 2H1 have vanishing cohomology in all degrees.
// Even k is rejected (std::invalid_argument).
cert::Certificate certify_elliptic_product(const Int& k);

// a = b(k+2)/(3b - k - 2) on the quadric; pole at 3b = k+2 throws
// std::domain_error.
Rational quadric_type_from_k(const Int& k, const Int& b);

// Genus thresholds at degree d for space curves:
//   castelnuovo_p3: g <= d(d-4)/4 + 1
//   quadric_forcing: g > d(d-3)/6 + (1 if 3|d else 1/3) forces the curve
//     onto a quadric
//   bd_curve: g >= (2/9)d^2 - d + 1
// The pair (d, g) = (9, 10) is the lone exception to the quadric step.
struct Thresholds {
  Rational castelnuovo_p3;
  Rational quadric_forcing;
  Rational bd_curve;
  bool exception_9_10 = false;
};
Thresholds thresholds(const Int& d);

// rho = g - (r+1)(g - d + r).
Rational brill_noether_rho(const Int& g, const Int& r, const Int& d);

// Cone case: true iff 4(k-1) = 6b - 9 - 3/(2b+1) has an integer solution k.
// Holds only at b = 1 (where k = 0).
bool cone_case_check(const Int& b);

// Twist-2 sections exist for every g >= 3 (degree 3(g-1)); twist-3 sections
// need g odd and g >= 9 (degree 3(g-1)/2).
bool existence_k2(const Int& g);
bool existence_k3(const Int& g);

}  // namespace ulrich::curves
