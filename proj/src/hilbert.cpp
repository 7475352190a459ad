#include "ulrich/hilbert.hpp"

#include <stdexcept>

#include "ulrich/ulrich_core.hpp"

namespace ulrich::hilbert {

using qexact::frac;
using qexact::QMatrix;
using qexact::solve_linear;

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Ratio A^{n-2}c_2 / A^n forced by the degree-6 consistency identity at
// (n, k) with H = h*A.  The identity residual is linear in (d, K2, c2), so
// three finite differences recover its coefficients; then
//   0 = Cd * h^n * A^n + CK * r^2 h^{n-2} * A^n + Cc * h^{n-2} * A^{n-2}c_2.
Rational c2_ratio_from_identity(int n, long k, const Int& r, long h) {
  using core::c2_identity_residual;
  using core::VarietyParams;
  auto residual = [&](const Int& d, const Int& K2, const Int& c2) {
    VarietyParams p;
    p.n = n;
    p.d = d;
    p.g = 0;
    p.k = k;
    p.K2 = K2;
    p.c2 = c2;
    return c2_identity_residual(p);
  };
  const Rational base = residual(1, 0, 0);
  const Rational cd = residual(2, 0, 0) - base;
  const Rational ck = residual(1, 1, 0) - base;
  const Rational cc = residual(1, 0, 1) - base;
  Int hn = 1, hn2 = 1;
  for (int i = 0; i < n - 2; ++i) hn2 *= h;
  hn = hn2 * h * h;
  return -(cd * Rational(hn) + ck * Rational(r * r) * Rational(hn2)) /
         (cc * Rational(hn2));
}

}  // namespace

std::vector<CaseId> all_cases() {
  return {CaseId::Dim8Sextic, CaseId::Dim10Quartic, CaseId::Dim10Sextic};
}

std::string case_name(CaseId id) {
  switch (id) {
    case CaseId::Dim8Sextic: return "hilbert-3d";
    case CaseId::Dim10Quartic: return "hilbert-4d";
    case CaseId::Dim10Sextic: return "hilbert-4e";
  }
  throw std::invalid_argument("case_name: unknown case");
}

RRTop rr_top_coefficients(int n, const Int& r) {
  if (n < 1) throw std::invalid_argument("rr_top_coefficients: n >= 1");
  return {Rational(1), -Rational(r * n) / 2};
}

Rational m_lower_bound(int n, const Int& k) {
  if (n < 1) throw std::invalid_argument("m_lower_bound: n >= 1");
  return Rational((n - 2) * k - 2) / Rational(n + 2);
}

CaseSetup build_case(CaseId id) {
  CaseSetup s;
  switch (id) {
    case CaseId::Dim8Sextic:
      // n = 8, K = -4A, H = 5A; roots from the Ulrich vanishing ladder.
      s.poly = {8, {1, 2, 3, 5, 10, 15}, 2, 4};
      s.constraints.push_back({RRConstraint::Kind::Value, 0, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::Value, 4, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::TopCoeff, 0, 0, 7,
                               rr_top_coefficients(8, 4).tn1_multiple});
      break;
    case CaseId::Dim10Quartic: {
      // n = 10, K = -5A, H = 2A.
      s.poly = {10, {1, 2, 3, 4, 6, 8, 10}, 3, 5};
      s.constraints.push_back({RRConstraint::Kind::Value, 0, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::Value, 5, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::TopCoeff, 0, 0, 9,
                               rr_top_coefficients(10, 5).tn1_multiple});
      // t^8 coefficient is A^8(K^2 + c2)/(12*8!); the c2 term is not free
      // but pinned by the consistency identity at (n,k,H) = (10,4,2A).
      s.c2_ratio = c2_ratio_from_identity(10, 4, 5, 2);
      const Rational mult = (Rational(25) + s.c2_ratio) * Rational(factorial(10)) /
                            (Rational(12) * Rational(factorial(8)));
      s.constraints.push_back({RRConstraint::Kind::TopCoeff, 0, 0, 8, mult});
      break;
    }
    case CaseId::Dim10Sextic:
      // n = 10, K = -5A, H = 6A.
      s.poly = {10, {1, 2, 3, 4, 6, 12, 18, 24}, 2, 5};
      s.constraints.push_back({RRConstraint::Kind::Value, 0, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::Value, 5, 1, 0, 0});
      s.constraints.push_back({RRConstraint::Kind::TopCoeff, 0, 0, 9,
                               rr_top_coefficients(10, 5).tn1_multiple});
      break;
  }
  return s;
}

CaseResult solve_case(CaseId id) {
  const CaseSetup setup = build_case(id);
  const int m = setup.poly.cofactor_degree;
  const QPoly q = QPoly::from_roots(setup.poly.known_roots);

  // Unknowns x_j = u * c_j for j < m and x_m = u; every constraint is
  // linear in them.
  const std::size_t vars = static_cast<std::size_t>(m) + 1;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const RRConstraint& con : setup.constraints) {
    std::vector<Rational> row(vars, Rational(0));
    if (con.kind == RRConstraint::Kind::Value) {
      const Rational qv = q.eval(Rational(con.t0));
      Rational power(1);
      for (std::size_t j = 0; j < vars; ++j) {
        row[j] = qv * power;
        power *= Rational(con.t0);
      }
      rhs.push_back(con.value);
    } else {
      for (std::size_t j = 0; j < vars; ++j)
        row[j] = q.coeff(con.index - static_cast<int>(j));
      row[vars - 1] -= con.u_multiple;
      rhs.push_back(0);
    }
    rows.push_back(std::move(row));
  }

  const auto sol = solve_linear(QMatrix::from_rows(rows), rhs);
  if (sol.kind != qexact::LinearSolution::Kind::Unique)
    throw std::logic_error("solve_case: constraints do not pin the polynomial");

  CaseResult res;
  res.id = id;
  res.u = sol.values.back();
  if (res.u == 0) throw std::logic_error("solve_case: degenerate u = 0");
  res.top_degree = res.u * Rational(factorial(setup.poly.n));
  for (int j = 0; j < m; ++j)
    res.cofactor.push_back(sol.values[static_cast<std::size_t>(j)] / res.u);

  std::vector<Rational> cof(res.cofactor);
  cof.push_back(Rational(1));
  res.reconstructed = (q * QPoly(cof)).scaled(res.u);

  if (res.u < 0)
    res.kind = CaseResult::Contradiction::Sign;
  else if (!qexact::is_integer(res.top_degree) || res.top_degree < 1)
    res.kind = CaseResult::Contradiction::Integrality;
  else
    res.kind = CaseResult::Contradiction::None;
  return res;
}

}  // namespace ulrich::hilbert
