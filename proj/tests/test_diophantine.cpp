#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "ulrich/diophantine.hpp"

using namespace ulrich::diophantine;

// ---------------------------------------------------------------------------
// Unpruned reference enumerations.  These deliberately avoid every shortcut
// the module takes (no square-root caps, no Cauchy-Schwarz bracket, no
// divisibility solve): plain nested loops over safely-too-large boxes.
// ---------------------------------------------------------------------------
namespace {

std::vector<ContoSolution> conto_reference(long a_max) {
  std::vector<ContoSolution> out;
  for (long a = 3; a <= a_max; ++a) {
    const long target = a * a - 6 * a + 4;
    if (target < 0) continue;
    // Ascending loops; squares are monotone, so overshooting breaks the loop.
    for (long c1 = 0; c1 * c1 <= target; ++c1)
      for (long c2 = 0; c2 <= c1 && c1 * c1 + c2 * c2 <= target; ++c2)
        for (long c3 = 0;
             c3 <= c2 && c1 * c1 + c2 * c2 + c3 * c3 <= target; ++c3)
          for (long c4 = 0; c4 <= c3; ++c4)
            if (c1 * c1 + c2 * c2 + c3 * c3 + c4 * c4 == target &&
                a >= c1 + c2 + 3)
              out.push_back({a, {c1, c2, c3, c4}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SexticSolution> sextic_reference() {
  std::vector<SexticSolution> out;
  const long box = 16;
  for (long a = 0; a <= box; ++a) {
    const long sq_budget = a * a - 10;
    if (sq_budget < 0) continue;
    std::array<long, 6> b{};
    const auto rec = [&](auto&& self, int i, long hi, long sum, long sq) -> void {
      if (i == 6) {
        if (sq == sq_budget && 3 * a - sum == 6) out.push_back({a, b});
        return;
      }
      for (long v = std::min(hi, box); v >= -box; --v) {
        const long nsq = sq + v * v;
        if (nsq > sq_budget) {
          if (v <= 0) break;  // squares keep growing below zero
          continue;
        }
        b[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, v, sum + v, nsq);
      }
    };
    rec(rec, 0, box, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParamTriple> params_reference(long d_max) {
  std::vector<ParamTriple> out;
  for (long n = 3; n <= 4 * d_max; ++n)
    for (long d = 1; d <= d_max; ++d)
      for (long g = 2; g <= d - 3; ++g)
        if ((n - 1) * d == (n + 2) * (g - 1)) out.push_back({n, d, g});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sums of four squares with the linear side condition") {
  const auto sols = solve_conto(64);
  CHECK(sols == conto_reference(64));

  // Frozen solution set: widening the cap adds nothing.
  const std::vector<ContoSolution> expected = {{6, {1, 1, 1, 1}},
                                               {6, {2, 0, 0, 0}},
                                               {7, {3, 1, 1, 0}},
                                               {9, {3, 3, 3, 2}}};
  CHECK(sols == expected);
  CHECK(solve_conto(256) == expected);
  CHECK(solve_conto(512) == expected);

  // Every solution satisfies both defining conditions.
  for (const auto& s : sols) {
    long q = 0;
    for (long c : s.c) q += c * c;
    CHECK(s.a * s.a - 6 * s.a + 4 == q);
    CHECK(s.a >= s.c[0] + s.c[1] + 3);
    CHECK(std::is_sorted(s.c.rbegin(), s.c.rend()));
  }
  CHECK(std::is_sorted(sols.begin(), sols.end()));

  // No solution with a = 5: the quadratic side is negative there.
  CHECK(5 * 5 - 6 * 5 + 4 < 0);
  for (const auto& s : sols) CHECK(s.a != 5);

  CHECK_THROWS_AS(solve_conto(2), std::invalid_argument);
  CHECK_THROWS_AS(solve_conto(1'000'001), std::invalid_argument);
}

TEST_CASE("sextic lattice classes") {
  const auto sols = solve_632num();
  CHECK(sols == sextic_reference());

  const std::vector<SexticSolution> expected = {{4, {1, 1, 1, 1, 1, 1}},
                                                {5, {2, 2, 2, 1, 1, 1}},
                                                {6, {3, 2, 2, 2, 2, 1}},
                                                {7, {3, 3, 3, 2, 2, 2}},
                                                {8, {3, 3, 3, 3, 3, 3}}};
  CHECK(sols == expected);

  for (const auto& s : sols) {
    long sum = 0, sq = 0;
    for (long x : s.b) sum += x, sq += x * x;
    CHECK(s.a * s.a - sq == 10);
    CHECK(3 * s.a - sum == 6);
    CHECK(std::is_sorted(s.b.rbegin(), s.b.rend()));
    // Cauchy-Schwarz bracket (a-4)(a-8) <= 0.
    CHECK((s.a - 4) * (s.a - 8) <= 0);
  }
  CHECK(std::is_sorted(sols.begin(), sols.end()));
}

TEST_CASE("degree/genus/dimension triples") {
  for (long d_max : {1L, 4L, 7L, 8L, 12L, 20L, 40L})
    CHECK(feasible_params(d_max) == params_reference(d_max));

  const auto at8 = feasible_params(8);
  REQUIRE(at8.size() == 1);
  CHECK(at8[0] == ParamTriple{4, 8, 5});
  CHECK((at8[0].n - 1) * at8[0].d == (at8[0].n + 2) * (at8[0].g - 1));
  CHECK(feasible_params(7).empty());

  // All returned triples respect the window and d >= n + 3.
  for (const auto& t : feasible_params(40)) {
    CHECK(t.n >= 3);
    CHECK(t.g >= 2);
    CHECK(t.g <= t.d - 3);
    CHECK(t.d >= t.n + 3);
  }

  CHECK_THROWS_AS(feasible_params(0), std::invalid_argument);
  CHECK_THROWS_AS(feasible_params(1'000'001), std::invalid_argument);
}
