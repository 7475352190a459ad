#include "ulrich/picard.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ulrich/diophantine.hpp"

namespace ulrich::picard {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_rank(const PicardClass& d) {
  require(d.r() >= 2 && d.r() <= 8, "picard: rank must be in [2, 8]");
}

}  // namespace

bool PicardClass::is_zero() const {
  if (a != 0) return false;
  return std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
}

bool PicardClass::operator<(const PicardClass& o) const {
  if (a != o.a) return a < o.a;
  return b < o.b;
}

PicardClass PicardClass::operator+(const PicardClass& o) const {
  require(b.size() == o.b.size(), "picard: rank mismatch");
  PicardClass s{a + o.a, b};
  for (std::size_t i = 0; i < b.size(); ++i) s.b[i] += o.b[i];
  return s;
}

PicardClass PicardClass::operator-(const PicardClass& o) const {
  return *this + o.scaled(-1);
}

PicardClass PicardClass::scaled(long m) const {
  PicardClass s{a * m, b};
  for (long& x : s.b) x *= m;
  return s;
}

std::string PicardClass::to_string() const {
  std::ostringstream os;
  os << "(" << a << ";";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ")";
  return os.str();
}

PicardClass canonical_class(int r) {
  require(r >= 2 && r <= 8, "canonical_class: rank must be in [2, 8]");
  return {-3, std::vector<long>(static_cast<std::size_t>(r), -1)};
}

long intersect(const PicardClass& d, const PicardClass& e) {
  require_rank(d);
  require(d.b.size() == e.b.size(), "intersect: rank mismatch");
  long acc = d.a * e.a;
  for (std::size_t i = 0; i < d.b.size(); ++i) acc -= d.b[i] * e.b[i];
  return acc;
}

long self_int(const PicardClass& d) { return intersect(d, d); }

Int pa(const PicardClass& d) {
  const long val = self_int(d) + intersect(d, canonical_class(d.r()));
  return Int(val) / 2 + 1;  // val is even: a(a-3) - sum b_i(b_i-1)
}

namespace {

// E^2 = -1 and E.K = -1 translate to sum b = 3a-1, sum b^2 = a^2+1 <= 37,
// so 0 <= a <= 6 and |b_i| <= 6 (Cauchy-Schwarz rules out a = -1 and a = 7).
std::vector<PicardClass> enumerate_minus_one(int r) {
  std::vector<PicardClass> out;
  std::vector<long> b(static_cast<std::size_t>(r));
  for (long a = 0; a <= 6; ++a) {
    const long sq = a * a + 1;
    auto rec = [&](auto&& self, int idx, long sum_left, long sq_left) -> void {
      if (idx == r) {
        if (sum_left == 0 && sq_left == 0) out.push_back({a, b});
        return;
      }
      const int slots = r - idx;
      for (long v = -6; v <= 6; ++v) {
        if (v * v > sq_left) continue;
        const long rest = sum_left - v;
        // Remaining entries: Cauchy-Schwarz rest^2 <= (slots-1) * budget.
        if (rest * rest > (slots - 1) * (sq_left - v * v)) continue;
        b[static_cast<std::size_t>(idx)] = v;
        self(self, idx + 1, rest, sq_left - v * v);
      }
    };
    rec(rec, 0, 3 * a - 1, sq);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<PicardClass>& minus_one_curves(int r) {
  require(r >= 2 && r <= 8, "minus_one_curves: rank must be in [2, 8]");
  static const std::vector<std::vector<PicardClass>> table = [] {
    std::vector<std::vector<PicardClass>> t;
    for (int rr = 2; rr <= 8; ++rr) t.push_back(enumerate_minus_one(rr));
    return t;
  }();
  return table[static_cast<std::size_t>(r - 2)];
}

EffectivityVerdict decide_effective(const PicardClass& d) {
  require_rank(d);
  require(d.r() <= 6, "decide_effective: needs -K ample, rank <= 6");
  const PicardClass minus_k = canonical_class(d.r()).scaled(-1);
  const auto& curves = minus_one_curves(d.r());

  EffectivityVerdict v;
  PicardClass cur = d;
  for (;;) {
    if (cur.is_zero()) {
      v.effective = true;
      v.h0 = 1;
      break;
    }
    // -K is ample: a nonzero effective class must meet it positively.
    if (intersect(cur, minus_k) <= 0) break;
    // A (-1)-curve met negatively is a fixed component; splitting it off
    // keeps h^0 (the restriction to the curve has negative degree).  The
    // list is sorted, so the first hit is the lex-smallest tie-break.
    auto it = std::find_if(curves.begin(), curves.end(),
                           [&](const PicardClass& e) { return intersect(cur, e) < 0; });
    if (it != curves.end()) {
      v.trace.push_back(*it);
      cur = cur - *it;
      continue;
    }
    // Nef and positive against -K: no higher cohomology, h^0 = chi.
    v.effective = true;
    v.h0 = Int(self_int(cur) - intersect(cur, canonical_class(cur.r()))) / 2 + 1;
    break;
  }
  v.residue = cur;
  return v;
}

bool is_nef(const PicardClass& d) {
  require_rank(d);
  require(d.r() <= 6, "is_nef: cone generators need rank <= 6");
  const auto& curves = minus_one_curves(d.r());
  return std::all_of(curves.begin(), curves.end(),
                     [&](const PicardClass& e) { return intersect(d, e) >= 0; });
}

bool is_ample(const PicardClass& d) {
  require_rank(d);
  require(d.r() <= 6, "is_ample: cone generators need rank <= 6");
  const auto& curves = minus_one_curves(d.r());
  return std::all_of(curves.begin(), curves.end(),
                     [&](const PicardClass& e) { return intersect(d, e) > 0; });
}

Int h0_omega_p2(const Int& t) {
  if (t <= 1) return 0;
  // Euler sequence: 0 -> H^0(Omega(t)) -> H^0(O(t-1))^3 -> H^0(O(t)) -> ...
  // with the right map surjective for t >= 1.
  return Int(3) * t * (t + 1) / 2 - (t + 1) * (t + 2) / 2;
}

cert::Certificate certify_632() {
  cert::Certificate c("632",
                      "sextic models on the 6-point blowup: degree 6, X^2 = 10, "
                      "genus 3, and 3K + 2X never effective");
  const auto sols = diophantine::solve_632num();
  c.check("solution count", 5, static_cast<long long>(sols.size()));
  const PicardClass k6 = canonical_class(6);
  c.check_true("-K nef", is_nef(k6.scaled(-1)));
  c.check_true("-K ample", is_ample(k6.scaled(-1)));
  for (const auto& s : sols) {
    PicardClass x{s.a, {s.b.begin(), s.b.end()}};
    const std::string tag = x.to_string();
    c.check(tag + " degree (-K).X", 6, intersect(x, k6.scaled(-1)));
    c.check(tag + " self-intersection", 10, self_int(x));
    c.check(tag + " genus", Int(3), pa(x));
    const PicardClass adj = k6.scaled(3) + x.scaled(2);
    const auto verdict = decide_effective(adj);
    c.check_true(tag + " 3K+2X " + adj.to_string() + " not effective", !verdict.effective);
    std::ostringstream trace;
    for (const auto& e : verdict.trace) trace << e.to_string();
    c.witness(tag + " reduction", trace.str() + " -> " + verdict.residue.to_string());
  }
  return c;
}

cert::Certificate certify_k1_candidates() {
  cert::Certificate c("k1-surface",
                      "polarizations with H^2 = -2 H.K on the 4-point blowup");
  const auto sols = diophantine::solve_conto();
  c.check("candidate count", 4, static_cast<long long>(sols.size()));
  const PicardClass k4 = canonical_class(4);
  int anticanonical_hits = 0;
  for (const auto& s : sols) {
    PicardClass h{s.a, {}};
    for (long ci : s.c) h.b.push_back(ci + 1);  // b_i = c_i + 1
    const std::string tag = h.to_string();
    c.check(tag + " H^2 + 2 H.K", 0, self_int(h) + 2 * intersect(h, k4));
    c.check_true(tag + " a >= b1+b2+1", h.a >= h.b[0] + h.b[1] + 1);
    if (h == k4.scaled(-2)) {
      ++anticanonical_hits;
      c.check_true(tag + " = -2K ample", is_ample(h));
      long min_prod = intersect(h, minus_one_curves(4).front());
      for (const auto& e : minus_one_curves(4))
        min_prod = std::min(min_prod, intersect(h, e));
      c.check(tag + " min (-1)-curve product", 2, min_prod);
    }
  }
  c.check("-2K among candidates", 1, anticanonical_hits);
  c.check("plane cotangent sections h0(Omega(3))", Int(8), h0_omega_p2(3));
  c.witness("sections clearing six point conditions", Int(8 - 6));
  return c;
}

}  // namespace ulrich::picard
