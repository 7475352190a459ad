#include "ulrich/curves.hpp"

#include <stdexcept>

#include "ulrich/qexact.hpp"

namespace ulrich::curves {

using qexact::frac;
using qexact::isqrt_exact;

std::array<Int, 2> FactorBundle::h() const {
  if (kind == Kind::RationalLine) {
    const Int h0 = degree >= 0 ? Int(degree + 1) : Int(0);
    const Int h1 = degree <= -2 ? Int(-degree - 1) : Int(0);
    return {h0, h1};
  }
  if (degree > 0) return {degree, 0};
  if (degree < 0) return {0, -degree};
  return nontrivial ? std::array<Int, 2>{0, 0} : std::array<Int, 2>{1, 1};
}

std::array<Int, 3> kunneth_h(const FactorBundle& f1, const FactorBundle& f2) {
  const auto a = f1.h(), b = f2.h();
  return {a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]};
}

namespace {

FactorBundle line(const Int& deg) {
  return {FactorBundle::Kind::RationalLine, deg, false};
}

void check_vanishing(cert::Certificate& c, const std::string& name,
                     const FactorBundle& f1, const FactorBundle& f2) {
  const auto h = kunneth_h(f1, f2);
  for (int i = 0; i < 3; ++i)
    c.check(name + " h" + std::to_string(i), Int(0), h[static_cast<std::size_t>(i)]);
}

}  // namespace

cert::Certificate certify_quadric_ulrich(const Int& c) {
  if (c < 1) throw std::invalid_argument("certify_quadric_ulrich: c >= 1");
  cert::Certificate out("quadric-curves",
                        "curves of type (c+1, 2c+2) on the quadric surface with "
                        "Ulrich twist 2c");
  const Int a = c + 1, b = 2 * c + 2, k = 2 * c;
  const Int d = a + b;
  const Int g = (a - 1) * (b - 1);
  out.check("degree a+b", Int(3 * (c + 1)), d);
  out.check("genus (a-1)(b-1)", Int(c * (2 * c + 1)), g);

  // Genus bound k <= (sqrt(8g+1)-1)/2, attained here: 8g+1 = (4c+1)^2.
  const auto root = isqrt_exact(8 * g + 1);
  out.check_true("8g+1 is a perfect square", root.has_value());
  if (root) out.check("twist meets genus bound", k, (*root - 1) / 2);

  // Restriction sequence twists: O(c,-1) and O(c,-1) - X = O(-1,-2c-3).
  check_vanishing(out, "O(c,-1)", line(c), line(-1));
  check_vanishing(out, "O(-1,-2c-3)", line(-1), line(-2 * c - 3));
  return out;
}

cert::Certificate certify_elliptic_product(const Int& k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("certify_elliptic_product: k must be odd and >= 3");
  cert::Certificate out("elliptic-product",
                        "elliptic-times-line threefold, twist k = " + k.get_str());
  // L - H1 = -C0 + (elliptic pullback of degree 3(k-1)/2): the line factor
  // has degree -1, so everything dies regardless of the elliptic factor.
  FactorBundle ell1{FactorBundle::Kind::Elliptic, 3 * (k - 1) / 2, false};
  check_vanishing(out, "L-H1", line(-1), ell1);
  // L - 2H1 = -(k+3)C0 + (degree-0 nontrivial elliptic pullback): here the
  // line factor has h1 = k+2 > 0 and the elliptic factor kills the product.
  FactorBundle ell2{FactorBundle::Kind::Elliptic, 0, true};
  out.check("line factor h1", Int(k + 2), line(-(k + 3)).h()[1]);
  check_vanishing(out, "L-2H1", line(-(k + 3)), ell2);
  return out;
}

Rational quadric_type_from_k(const Int& k, const Int& b) {
  const Int den = 3 * b - k - 2;
  if (den == 0) throw std::domain_error("quadric_type_from_k: pole at 3b = k+2");
  return Rational(b * (k + 2)) / Rational(den);
}

Thresholds thresholds(const Int& d) {
  Thresholds t;
  t.castelnuovo_p3 = Rational(d * (d - 4)) / 4 + 1;
  t.quadric_forcing = Rational(d * (d - 3)) / 6 + (d % 3 == 0 ? Rational(1) : frac(1, 3));
  t.bd_curve = frac(2, 9) * Rational(d * d) - Rational(d) + 1;
  t.exception_9_10 = (d == 9);
  return t;
}

Rational brill_noether_rho(const Int& g, const Int& r, const Int& d) {
  return Rational(g) - Rational((r + 1) * (g - d + r));
}

bool cone_case_check(const Int& b) {
  if (b < 1) throw std::invalid_argument("cone_case_check: b >= 1");
  const Rational rhs = Rational(6 * b - 9) - frac(3, 1) / Rational(2 * b + 1);
  return qexact::is_integer(rhs / 4 + 1);
}

bool existence_k2(const Int& g) { return g >= 3; }

bool existence_k3(const Int& g) { return g >= 9 && g % 2 == 1; }

}  // namespace ulrich::curves
