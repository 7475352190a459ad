#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Exact scalar domain and small linear-algebra substrate.
//
// Every quantity that feeds a verdict anywhere in this project is an Int or a
// Rational from this header; no floating point is used.  Rationals are kept in
// lowest terms with positive denominator (GMP maintains this through
// arithmetic; construction helpers canonicalize).

namespace ulrich::qexact {

using Int = mpz_class;
using Rational = mpq_class;

// num/den, canonicalized.  Throws std::invalid_argument when den == 0.
Rational frac(const Int& num, const Int& den);

bool is_integer(const Rational& q);

// Exact conversion; throws std::invalid_argument unless q is an integer.
Int to_int(const Rational& q);

// Exact decimal-free rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

// floor(sqrt(s)) if s is a perfect square, empty otherwise (also for s < 0).
std::optional<Int> isqrt_exact(const Int& s);

// e_k(xs), the k-th elementary symmetric function.  k outside [0, |xs|]
// yields 0; e_0 = 1.
Int elem_symmetric(const std::vector<Int>& xs, std::size_t k);

// Dense univariate polynomial over Rational, coefficients stored ascending
// (coeffs_[i] is the t^i coefficient), trailing zeros trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rational& c);
  explicit QPoly(std::vector<Rational> coeffs);

  // Monic product of (t - r) over the given roots.
  static QPoly from_roots(const std::vector<Int>& roots);

  int degree() const;  // -1 for the zero polynomial
  const Rational& coeff(int i) const;
  bool is_zero() const { return coeffs_.empty(); }

  Rational eval(const Rational& t) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rational& c) const;
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Horner evaluation; same as p.eval(t), kept as a free function because call
// sites read better with the polynomial named.
Rational poly_eval(const QPoly& p, const Rational& t);

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  Rational& at(std::size_t r, std::size_t c);
  const Rational& at(std::size_t r, std::size_t c) const;
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Outcome of exact Gauss-Jordan elimination on A x = b.
//
// Parametric solutions express every variable as an affine function of the
// free (non-pivot) variables:
//   x_i = particular[i] + sum_j free_coeffs(i, j) * x_{free_cols[j]}
// Pivot columns are chosen left to right, so the decomposition is
// reproducible; designated parameters placed in trailing columns stay free
// whenever the leading block is nonsingular.
struct LinearSolution {
  enum class Kind { Unique, Parametric, Inconsistent };
  Kind kind = Kind::Inconsistent;

  std::vector<Rational> values;  // Unique only: one entry per column

  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;    // Parametric only
  std::vector<Rational> particular;      // Parametric: free variables = 0
  QMatrix free_coeffs;                   // cols(A) x |free_cols|

  // Full assignment for given free-variable values (Parametric only).
  std::vector<Rational> substitute(const std::vector<Rational>& free_values) const;
};

LinearSolution solve_linear(const QMatrix& a, const std::vector<Rational>& rhs);

// Affine expression in named parameters, e.g. "7 - 7/48*d".  Used to carry
// parametric solve_linear output through derivations that keep a degree or a
// ramification count symbolic.  Zero coefficients are dropped, so equal
// expressions compare equal structurally.
struct AffineExpr {
  Rational constant = 0;
  std::map<std::string, Rational> coeffs;

  static AffineExpr constant_term(const Rational& c);
  static AffineExpr variable(const std::string& name);

  AffineExpr operator+(const AffineExpr& o) const;
  AffineExpr operator-(const AffineExpr& o) const;
  AffineExpr scaled(const Rational& c) const;
  bool operator==(const AffineExpr& o) const;

  bool is_zero() const { return constant == 0 && coeffs.empty(); }
  bool is_constant() const { return coeffs.empty(); }

  Rational eval(const std::map<std::string, Rational>& values) const;
  std::string to_string() const;

 private:
  void drop_zeros();
};

// Affine expression of variable `var` in a Parametric solution, with the
// free columns named by `free_names` (one name per entry of free_cols).
AffineExpr affine_of(const LinearSolution& sol, std::size_t var,
                     const std::vector<std::string>& free_names);

}  // namespace ulrich::qexact
