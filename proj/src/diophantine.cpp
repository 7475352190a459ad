#include "ulrich/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace ulrich::diophantine {

namespace {

// floor(sqrt(v)) for v >= 0 over plain machine integers.
long lsqrt(long v) {
  if (v < 0) return -1;
  long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_square(long v, long& root) {
  if (v < 0) return false;
  root = lsqrt(v);
  return root * root == v;
}

}  // namespace

std::vector<ContoSolution> solve_conto(long a_max) {
  if (a_max < 3 || a_max > 1'000'000)
    throw std::invalid_argument("solve_conto: a_max out of range [3, 1000000]");
  std::vector<ContoSolution> out;
  for (long a = 3; a <= a_max; ++a) {
    const long target = a * a - 6 * a + 4;
    if (target < 0) continue;
    const long c1_cap = std::min(lsqrt(target), a - 3);
    for (long c1 = 0; c1 <= c1_cap; ++c1) {
      const long r1 = target - c1 * c1;
      // a >= c1 + c2 + 3 caps c2 alongside the square budget.
      const long c2_cap = std::min({c1, lsqrt(r1), a - 3 - c1});
      for (long c2 = 0; c2 <= c2_cap; ++c2) {
        const long r2 = r1 - c2 * c2;
        for (long c3 = std::min(c2, lsqrt(r2)); c3 >= 0; --c3) {
          long c4;
          if (!is_square(r2 - c3 * c3, c4)) continue;
          if (c4 > c3) continue;
          out.push_back({a, {c1, c2, c3, c4}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SexticSolution> solve_632num() {
  std::vector<SexticSolution> out;
  // 4 <= a <= 8 by Cauchy-Schwarz (see header); within a solution every
  // entry satisfies b_i^2 <= a^2 - 10.
  for (long a = 4; a <= 8; ++a) {
    const long sq_budget = a * a - 10;
    const long sum_target = 3 * a - 6;
    const long cap = lsqrt(sq_budget);
    std::array<long, 6> b{};
    auto rec = [&](auto&& self, int idx, long high, long sq_left, long sum_left) -> void {
      if (idx == 6) {
        if (sq_left == 0 && sum_left == 0) out.push_back({a, b});
        return;
      }
      const int slots = 6 - idx;
      for (long v = std::min(high, lsqrt(sq_left)); v >= -cap; --v) {
        // Remaining sum must stay reachable with slots-1 entries in [-cap, v].
        const long rest = sum_left - v;
        if (rest > (slots - 1) * v || rest < -(slots - 1) * cap) continue;
        b[static_cast<std::size_t>(idx)] = v;
        self(self, idx + 1, v, sq_left - v * v, rest);
      }
    };
    rec(rec, 0, cap, sq_budget, sum_target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParamTriple> feasible_params(long d_max) {
  if (d_max < 1 || d_max > 1'000'000)
    throw std::invalid_argument("feasible_params: d_max out of range [1, 1000000]");
  std::vector<ParamTriple> out;
  for (long d = 1; d <= d_max; ++d) {
    // g <= d-3 with (n-1)d = (n+2)(g-1) forces 3d >= 4(n+2).
    for (long n = 3; 4 * (n + 2) <= 3 * d; ++n) {
      const long num = (n - 1) * d;
      if (num % (n + 2) != 0) continue;
      const long g = num / (n + 2) + 1;
      if (g < 2 || g > d - 3) continue;
      out.push_back({n, d, g});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ulrich::diophantine
