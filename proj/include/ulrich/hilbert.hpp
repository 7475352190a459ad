#pragma once

#include <string>
#include <vector>

#include "ulrich/qexact.hpp"

// Constrained Hilbert-polynomial interpolation for the proportional cases
// K_X = -rA, H = sA.  The polynomial P(t) = chi(K_X + tA) factors as
//   P(t) = u * prod (t - rho) * (monic cofactor of degree m),
// with u = A^n/n! symbolic, the known roots rho forced by vanishing, and the
// remaining degrees of freedom pinned by Riemann-Roch coefficient identities
// and prescribed values.  Ampleness of A demands u > 0 and n!*u a positive
// integer; each case below violates one of the two.
//
// The constraints are linear in (u*c_0, ..., u*c_{m-1}, u), so solving is a
// single exact linear solve; value constraints enter first (P(0), then
// P(t0)), then coefficient constraints, and the elimination order is fixed.

namespace ulrich::hilbert {

using qexact::Int;
using qexact::QPoly;
using qexact::Rational;

enum class CaseId { Dim8Sextic, Dim10Quartic, Dim10Sextic };

std::vector<CaseId> all_cases();
std::string case_name(CaseId id);

struct ConstrainedPoly {
  int n = 0;                    // degree of P
  std::vector<Int> known_roots; // forced integer roots, ascending
  int cofactor_degree = 0;      // m
  Int fano_r = 0;               // K_X = -rA
};

struct RRConstraint {
  enum class Kind { Value, TopCoeff };
  Kind kind;
  // Value: P(t0) = value.  TopCoeff: coefficient of t^index equals
  // u_multiple * u.
  Int t0 = 0;
  Rational value = 0;
  int index = 0;
  Rational u_multiple = 0;
};

struct CaseSetup {
  ConstrainedPoly poly;
  std::vector<RRConstraint> constraints;
  Rational c2_ratio = 0;  // A^{n-2}c_2 = ratio * A^n when imported, else 0
};

// Leading Riemann-Roch data: coefficient of t^n is u, coefficient of
// t^{n-1} is -(r*n/2) * u.
struct RRTop {
  Rational tn_multiple;   // 1
  Rational tn1_multiple;  // -(r*n/2)
};
RRTop rr_top_coefficients(int n, const Int& r);

// m(H,A) > ((n-2)k - 2)/(n+2); exact right-hand side.
Rational m_lower_bound(int n, const Int& k);

CaseSetup build_case(CaseId id);

struct CaseResult {
  enum class Contradiction { Sign, Integrality, None };
  CaseId id;
  Rational u;                       // solved value of A^n/n!
  Rational top_degree;              // A^n = n! * u
  std::vector<Rational> cofactor;   // c_0..c_{m-1}, then 1 implicit
  QPoly reconstructed;              // u * prod(t-rho) * cofactor
  Contradiction kind;
};

// Solves the case's linear system; the outcome is always a refutation
// (u <= 0, or n!*u not a positive integer).
CaseResult solve_case(CaseId id);

}  // namespace ulrich::hilbert
