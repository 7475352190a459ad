#pragma once

#include <array>
#include <vector>

// Exhaustive integer enumeration for the three finite search problems the
// classification reduces to.  Solutions are returned sorted; enumeration
// ranges are either proved internally (Cauchy-Schwarz) or supplied as an
// explicit cap that the caller can raise.

namespace ulrich::diophantine {

// a^2 - 6a + 4 = c1^2 + c2^2 + c3^2 + c4^2 with c1 >= c2 >= c3 >= c4 >= 0
// and a >= c1 + c2 + 3.
struct ContoSolution {
  long a;
  std::array<long, 4> c;
  auto operator<=>(const ContoSolution&) const = default;
};
std::vector<ContoSolution> solve_conto(long a_max = 64);

// a^2 - sum b_i^2 = 10 and 3a - sum b_i = 6 over b1 >= ... >= b6 in Z.
// The a-range 4 <= a <= 8 is forced by Cauchy-Schwarz:
// (3a-6)^2 <= 6(a^2-10)  <=>  (a-4)(a-8) <= 0.
struct SexticSolution {
  long a;
  std::array<long, 6> b;
  auto operator<=>(const SexticSolution&) const = default;
};
std::vector<SexticSolution> solve_632num();

// Degree/genus/dimension triples with (n-1)d = (n+2)(g-1), n >= 3 and
// 2 <= g <= d-3, for all d <= d_max.
struct ParamTriple {
  long n;
  long d;
  long g;
  auto operator<=>(const ParamTriple&) const = default;
};
std::vector<ParamTriple> feasible_params(long d_max);

}  // namespace ulrich::diophantine
