#pragma once

#include <vector>

#include "ulrich/certificate.hpp"
#include "ulrich/qexact.hpp"

// Divisor-class arithmetic on the blowup of the plane in r general points,
// 2 <= r <= 8.  A class (a; b1,...,br) stands for a*L - sum b_i E_i, with
// intersection form a*a' - sum b_i b_i', canonical class (-3; -1,...,-1)
// and K^2 = 9 - r.  Effectivity and nefness decisions use the (-1)-curve
// generators of the cone of curves, which exist exactly in this range; the
// reduction steps below are only valid while -K stays ample, so decisions
// are restricted to r <= 6.

namespace ulrich::picard {

using qexact::Int;
using qexact::Rational;

struct PicardClass {
  long a = 0;
  std::vector<long> b;

  int r() const { return static_cast<int>(b.size()); }
  bool is_zero() const;
  bool operator==(const PicardClass&) const = default;

  // Lexicographic on (a, b1, ..., br); used for deterministic tie-breaks.
  bool operator<(const PicardClass& o) const;

  PicardClass operator+(const PicardClass& o) const;
  PicardClass operator-(const PicardClass& o) const;
  PicardClass scaled(long m) const;

  std::string to_string() const;
};

PicardClass canonical_class(int r);

// Throws std::invalid_argument when the ranks differ or r is outside [2, 8].
long intersect(const PicardClass& d, const PicardClass& e);
long self_int(const PicardClass& d);

// Arithmetic genus (D^2 + D.K)/2 + 1; always an integer on this lattice.
Int pa(const PicardClass& d);

// All classes with E^2 = E.K = -1, sorted lexicographically.  Cached per r;
// counts are 3, 6, 10, 16, 27, 56, 240 for r = 2..8.
const std::vector<PicardClass>& minus_one_curves(int r);

struct EffectivityVerdict {
  bool effective = false;
  Int h0 = 0;                      // meaningful when effective
  std::vector<PicardClass> trace;  // (-1)-curves subtracted, in order
  PicardClass residue;             // class left when the reduction stopped
};

// Decides effectivity for r <= 6 by splitting off (-1)-curves with negative
// intersection (each is then a fixed component, so h^0 is preserved) until
// the class is zero, obstructed, or nef.  Tie-break: always subtract the
// lexicographically smallest negative (-1)-curve.
EffectivityVerdict decide_effective(const PicardClass& d);

// Nef (resp. ample): intersection with every (-1)-curve >= 0 (resp. > 0);
// r <= 6 so that the (-1)-curves generate the cone of curves.
bool is_nef(const PicardClass& d);
bool is_ample(const PicardClass& d);

// h^0 of the twisted cotangent bundle of the plane: 3*C(t+1,2) - C(t+2,2)
// for t >= 1 (Euler sequence), 0 for t <= 1.
Int h0_omega_p2(const Int& t);

// Five sextic-model classes on the 6-point blowup: degree 6, self-
// intersection 10, genus 3, and 3K + 2X never effective.
cert::Certificate certify_632();

// Polarizations H with H^2 = -2 H.K on the 4-point blowup, mapped from the
// quadratic enumeration (b_i = c_i + 1); identifies the -2K member.
cert::Certificate certify_k1_candidates();

}  // namespace ulrich::picard
