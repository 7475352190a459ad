#include "ulrich/qexact.hpp"

#include <sstream>
#include <stdexcept>

namespace ulrich::qexact {

Rational frac(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Int to_int(const Rational& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_int: " + to_string(q) + " is not an integer");
  return q.get_num();
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Int& n) { return n.get_str(); }

std::optional<Int> isqrt_exact(const Int& s) {
  if (s < 0) return std::nullopt;
  Int root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

Int elem_symmetric(const std::vector<Int>& xs, std::size_t k) {
  if (k > xs.size()) return 0;
  // e[j] after processing x becomes e[j] + x*e[j-1]; one pass per element.
  std::vector<Int> e(k + 1);
  e[0] = 1;
  for (const Int& x : xs)
    for (std::size_t j = k; j >= 1; --j) e[j] += x * e[j - 1];
  return e[k];
}

QPoly::QPoly(const Rational& c) {
  coeffs_.push_back(c);
  trim();
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::from_roots(const std::vector<Int>& roots) {
  QPoly p(Rational(1));
  for (const Int& r : roots) {
    QPoly linear(std::vector<Rational>{Rational(-r), Rational(1)});
    p = p * linear;
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const Rational& QPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational QPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + o.scaled(Rational(-1)); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return QPoly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPoly(std::move(out));
}

QPoly QPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (Rational& x : out) x *= c;
  return QPoly(std::move(out));
}

Rational poly_eval(const QPoly& p, const Rational& t) { return p.eval(t); }

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw std::invalid_argument("QMatrix::from_rows: no rows");
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rational& QMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QMatrix::at");
  return data_[r * cols_ + c];
}

const Rational& QMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QMatrix::at");
  return data_[r * cols_ + c];
}

std::vector<Rational> LinearSolution::substitute(
    const std::vector<Rational>& free_values) const {
  if (kind != Kind::Parametric)
    throw std::logic_error("substitute: solution is not parametric");
  if (free_values.size() != free_cols.size())
    throw std::invalid_argument("substitute: wrong number of free values");
  std::vector<Rational> out(particular);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      out[i] += free_coeffs.at(i, j) * free_values[j];
  return out;
}

LinearSolution solve_linear(const QMatrix& a, const std::vector<Rational>& rhs) {
  if (rhs.size() != a.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();

  // Augmented working copy; Gauss-Jordan with pivots scanned left to right.
  QMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, cols) = rhs[i];
  }

  LinearSolution sol;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = col; j <= cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    const Rational inv = 1 / m.at(rank, col);
    for (std::size_t j = col; j <= cols; ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j <= cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    sol.pivot_cols.push_back(col);
    ++rank;
  }

  for (std::size_t i = rank; i < rows; ++i)
    if (m.at(i, cols) != 0) {
      sol.kind = LinearSolution::Kind::Inconsistent;
      return sol;
    }

  if (rank == cols) {
    sol.kind = LinearSolution::Kind::Unique;
    sol.values.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) sol.values[sol.pivot_cols[i]] = m.at(i, cols);
    return sol;
  }

  sol.kind = LinearSolution::Kind::Parametric;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : sol.pivot_cols) is_pivot[p] = true;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) sol.free_cols.push_back(j);

  sol.particular.assign(cols, Rational(0));
  sol.free_coeffs = QMatrix(cols, sol.free_cols.size());
  for (std::size_t i = 0; i < sol.pivot_cols.size(); ++i) {
    const std::size_t p = sol.pivot_cols[i];
    sol.particular[p] = m.at(i, cols);
    for (std::size_t j = 0; j < sol.free_cols.size(); ++j)
      sol.free_coeffs.at(p, j) = -m.at(i, sol.free_cols[j]);
  }
  for (std::size_t j = 0; j < sol.free_cols.size(); ++j)
    sol.free_coeffs.at(sol.free_cols[j], j) = 1;
  return sol;
}

AffineExpr AffineExpr::constant_term(const Rational& c) {
  AffineExpr e;
  e.constant = c;
  return e;
}

AffineExpr AffineExpr::variable(const std::string& name) {
  AffineExpr e;
  e.coeffs[name] = 1;
  return e;
}

void AffineExpr::drop_zeros() {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
  AffineExpr e(*this);
  e.constant += o.constant;
  for (const auto& [name, c] : o.coeffs) e.coeffs[name] += c;
  e.drop_zeros();
  return e;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const {
  return *this + o.scaled(Rational(-1));
}

AffineExpr AffineExpr::scaled(const Rational& c) const {
  AffineExpr e;
  e.constant = constant * c;
  if (c != 0)
    for (const auto& [name, x] : coeffs) e.coeffs[name] = x * c;
  return e;
}

bool AffineExpr::operator==(const AffineExpr& o) const {
  return constant == o.constant && coeffs == o.coeffs;
}

Rational AffineExpr::eval(const std::map<std::string, Rational>& values) const {
  Rational acc = constant;
  for (const auto& [name, c] : coeffs) {
    auto it = values.find(name);
    if (it == values.end())
      throw std::invalid_argument("AffineExpr::eval: missing value for " + name);
    acc += c * it->second;
  }
  return acc;
}

std::string AffineExpr::to_string() const {
  std::ostringstream os;
  os << constant.get_str();
  for (const auto& [name, c] : coeffs) {
    if (c >= 0)
      os << " + " << c.get_str();
    else
      os << " - " << Rational(-c).get_str();
    os << "*" << name;
  }
  return os.str();
}

AffineExpr affine_of(const LinearSolution& sol, std::size_t var,
                     const std::vector<std::string>& free_names) {
  if (sol.kind != LinearSolution::Kind::Parametric)
    throw std::logic_error("affine_of: solution is not parametric");
  if (free_names.size() != sol.free_cols.size())
    throw std::invalid_argument("affine_of: wrong number of names");
  AffineExpr e = AffineExpr::constant_term(sol.particular.at(var));
  for (std::size_t j = 0; j < sol.free_cols.size(); ++j)
    e = e + AffineExpr::variable(free_names[j]).scaled(sol.free_coeffs.at(var, j));
  return e;
}

}  // namespace ulrich::qexact
