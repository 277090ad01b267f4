#include "core/divisor.hpp"

#include <algorithm>

#include "core/err.hpp"

namespace zetafn {

Divisor dv_zero() { return Divisor{}; }

Divisor dv_make(std::vector<std::pair<CurvePoint, long long>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  Divisor D;
  for (auto& [P, n] : terms) {
    if (n == 0) continue;
    if (!D.t.empty() && point_eq(D.t.back().first, P))
      D.t.back().second += n;
    else
      D.t.emplace_back(P, n);
    if (!D.t.empty() && D.t.back().second == 0) D.t.pop_back();
  }
  return D;
}

Divisor dv_of_point(const CurvePoint& P, long long n) {
  if (n == 0) return Divisor{};
  return Divisor{{{P, n}}};
}

long long dv_degree(const Divisor& D) {
  long long d = 0;
  for (auto& [P, n] : D.t) d += n * (long long)P.e;
  return d;
}

long long dv_mult(const Divisor& D, const CurvePoint& P) {
  for (auto& [Q, n] : D.t)
    if (point_eq(Q, P)) return n;
  return 0;
}

bool dv_eq(const Divisor& a, const Divisor& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); i++)
    if (a.t[i].second != b.t[i].second || !point_eq(a.t[i].first, b.t[i].first)) return false;
  return true;
}

bool dv_is_zero(const Divisor& D) { return D.t.empty(); }

bool dv_effective(const Divisor& D) {
  for (auto& [P, n] : D.t)
    if (n < 0) return false;
  return true;
}

Divisor dv_add(const Divisor& a, const Divisor& b) {
  std::vector<std::pair<CurvePoint, long long>> terms = a.t;
  terms.insert(terms.end(), b.t.begin(), b.t.end());
  return dv_make(std::move(terms));
}

Divisor dv_sub(const Divisor& a, const Divisor& b) { return dv_add(a, dv_neg(b)); }

Divisor dv_neg(const Divisor& a) {
  Divisor D = a;
  for (auto& [P, n] : D.t) n = -n;
  return D;
}

Divisor dv_scale(long long n, const Divisor& a) {
  if (n == 0) return Divisor{};
  Divisor D = a;
  for (auto& [P, m] : D.t) m *= n;
  return D;
}

Divisor dv_pos(const Divisor& a) {
  Divisor D;
  for (auto& [P, n] : a.t)
    if (n > 0) D.t.emplace_back(P, n);
  return D;
}

Divisor dv_negpart(const Divisor& a) {
  Divisor D;
  for (auto& [P, n] : a.t)
    if (n < 0) D.t.emplace_back(P, -n);
  return D;
}

static void key_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; i++) s.push_back(char((v >> (8 * i)) & 0xff));
}

std::string point_key(const CurvePoint& P) {
  std::string s;
  key_u32(s, P.e);
  for (const FElem& c : P.P) {
    key_u32(s, (uint32_t)c.size());
    for (uint32_t w : c) key_u32(s, w);
  }
  return s;
}

std::string dv_key(const Divisor& D) {
  std::string s;
  key_u32(s, (uint32_t)D.t.size());
  for (auto& [P, n] : D.t) {
    s += point_key(P);
    key_u32(s, (uint32_t)(uint64_t(n) & 0xffffffffu));
    key_u32(s, (uint32_t)(uint64_t(n) >> 32));
  }
  return s;
}

bool frobenius_invariant(const Curve& C, const Divisor& D, const Field& sub) {
  const Field& F = C.F;
  if (sub->p != F->p || F->k % sub->k != 0)
    fail(Err::WrongField, "not a subfield of the curve's field");
  for (auto& [e, c] : C.form.t)
    if (!F->eq(frob_over(sub, F, c), c))
      fail(Err::WrongField, "curve form has a coefficient outside the subfield");
  std::vector<std::pair<CurvePoint, long long>> image;
  for (auto& [P, n] : D.t) {
    Field K = ext_field(F, P.e);
    std::array<FElem, 3> img;
    for (int i = 0; i < 3; i++) img[i] = K->frob(P.P[i], sub->k);
    image.emplace_back(make_point(C, K, img), n);
  }
  return dv_eq(D, dv_make(std::move(image)));
}

}  // namespace zetafn
