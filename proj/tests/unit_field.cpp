#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/field.hpp"
#include "core/fieldpoly.hpp"
#include "core/multipoly.hpp"
#include "core/nt.hpp"
#include "core/rng.hpp"

using namespace zetafn;

TEST_CASE("canonical moduli from the counter scan") {
  auto F5 = field_make(5, 1);
  CHECK(F5->modulus == std::vector<uint32_t>{0, 1});  // T
  auto F25 = field_make(5, 2);
  CHECK(F25->modulus == std::vector<uint32_t>{2, 0, 1});  // T^2 + 2
  auto F4 = field_make(2, 2);
  CHECK(F4->modulus == std::vector<uint32_t>{1, 1, 1});  // T^2 + T + 1
  auto F8 = field_make(2, 3);
  CHECK(F8->modulus == std::vector<uint32_t>{1, 1, 0, 1});  // T^3 + T + 1
  CHECK_THROWS(field_make(6, 1));
}

TEST_CASE("field axioms on random elements") {
  Rng rng(42);
  for (auto [p, k] : {std::pair{3u, 4u}, {2u, 5u}, {7u, 2u}, {13u, 1u}}) {
    auto F = field_make(p, k);
    uint64_t q = F->q_u64;
    for (int i = 0; i < 50; i++) {
      FElem a = F->unrank(rng.below(q));
      FElem b = F->unrank(rng.below(q));
      FElem c = F->unrank(rng.below(q));
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == F->zero());
      CHECK(F->sub(a, b) == F->add(a, F->neg(b)));
      if (!F->is_zero(a)) {
        CHECK(F->mul(a, F->inv(a)) == F->one());
      }
      // Fermat: a^q = a, and the k-fold p-power Frobenius is the identity
      CHECK(F->pow(a, F->q) == a);
      CHECK(F->frob(a, k) == a);
      // Frobenius is additive
      CHECK(F->frob(F->add(a, b), 1) == F->add(F->frob(a, 1), F->frob(b, 1)));
      CHECK(F->unrank(F->rank(a)) == a);
    }
  }
}

TEST_CASE("discrete log tables agree with generic arithmetic") {
  auto F = field_make(3, 4);
  const ZechTables* zt = F->tables(uint64_t(1) << 23);
  REQUIRE(zt != nullptr);
  uint64_t q = F->q_u64;
  // exp/log are inverse bijections
  for (uint64_t r = 1; r < q; r++) CHECK(zt->exp[zt->log[r]] == r);
  // zech identity: g^z = 1 + g^d elementwise
  FElem g = F->unrank(zt->gen_rank);
  Rng rng(7);
  for (int i = 0; i < 200; i++) {
    uint32_t d = (uint32_t)rng.below(q - 1);
    FElem v = F->add(F->one(), F->pow_u64(g, d));
    if (F->is_zero(v)) {
      CHECK(zt->zech[d] == ZechTables::LOGZERO);
    } else {
      CHECK(zt->zech[d] == zt->log[F->rank(v)]);
    }
  }
}

TEST_CASE("extension embeddings and relative coordinates") {
  auto F9 = field_make(3, 2);
  auto F729 = field_make(3, 6);  // contains F9 with relative degree 3
  Rng rng(99);
  for (int i = 0; i < 30; i++) {
    FElem a = F9->unrank(rng.below(9));
    FElem b = F9->unrank(rng.below(9));
    FElem ea = embed_up(F9, F729, a), eb = embed_up(F9, F729, b);
    // ring map
    CHECK(embed_up(F9, F729, F9->add(a, b)) == F729->add(ea, eb));
    CHECK(embed_up(F9, F729, F9->mul(a, b)) == F729->mul(ea, eb));
    CHECK(project_down(F9, F729, ea) == a);
    // embedded elements are fixed by the relative Frobenius x -> x^9
    CHECK(frob_over(F9, F729, ea, 1) == ea);
    CHECK(exact_degree(F9, F729, ea) == 1);
  }
  // a generator of F729 has full degree over F9
  CHECK(exact_degree(F9, F729, F729->gen()) == 3);
  // relative coordinates reassemble: x = sum_j embed(c_j) * beta^j
  for (int i = 0; i < 30; i++) {
    FElem x = F729->unrank(rng.below(729));
    auto cs = rel_coords(F9, F729, x);
    REQUIRE(cs.size() == 3);
    FElem acc = F729->zero();
    FElem bj = F729->one();
    for (auto& cj : cs) {
      acc = F729->add(acc, F729->mul(embed_up(F9, F729, cj), bj));
      bj = F729->mul(bj, F729->gen());
    }
    CHECK(acc == x);
  }
  CHECK_THROWS(project_down(F9, F729, F729->gen()));
}

TEST_CASE("univariate gcd, roots and factorisation") {
  auto F7 = field_make(7, 1);
  Rng rng(5);
  auto el = [&](long v) { return F7->from_int(((v % 7) + 7) % 7); };
  // (x-1)(x-2)^2
  FPoly f = fp_mul(F7, fp_mul(F7, FPoly{el(-1), el(1)}, FPoly{el(-2), el(1)}),
                   FPoly{el(-2), el(1)});
  auto roots = fp_roots(F7, f, rng);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == el(1));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == el(2));
  CHECK(roots[1].second == 2);

  // gcd((x-1)(x-2), (x-2)(x-3)) = x-2 monic
  FPoly a = fp_mul(F7, FPoly{el(-1), el(1)}, FPoly{el(-2), el(1)});
  FPoly b = fp_mul(F7, FPoly{el(-3), el(1)}, FPoly{el(-2), el(1)});
  CHECK(fp_gcd(F7, a, b) == FPoly{el(-2), el(1)});

  // x^2+1 irreducible over F_7 (since -1 is not a square mod 7)
  CHECK(fp_irreducible(F7, FPoly{el(1), el(0), el(1)}));
  CHECK(!fp_irreducible(F7, FPoly{el(5), el(0), el(1)}));  // x^2+5 = (x-3)(x-4)

  // char-p squarefree collapse: x^3+1 = (x+1)^3 over F_3
  auto F3 = field_make(3, 1);
  FPoly cube{F3->one(), F3->zero(), F3->zero(), F3->one()};
  auto sf = fp_squarefree(F3, cube);
  REQUIRE(sf.size() == 1);
  CHECK(sf[0].second == 3);
  CHECK(sf[0].first == FPoly{F3->one(), F3->one()});

  // full factorisation over an extension field, shape check by degrees
  auto F4 = field_make(2, 2);
  FPoly x4x{F4->zero(), F4->one(), F4->zero(), F4->zero(), F4->one()};  // x^4+x
  auto fac = fp_factor(F4, x4x, rng);
  // x^4+x = x (x+1)(x^2+x+1); over F_4 the quadratic splits: 4 linear factors
  CHECK(fac.size() == 4);
  for (auto& [u, m] : fac) {
    CHECK(fp_deg(u) == 1);
    CHECK(m == 1);
  }
}

TEST_CASE("factorisation recovers random products") {
  auto F = field_make(5, 2);
  Rng rng(31337);
  for (int trial = 0; trial < 10; trial++) {
    // product of random monic polynomials
    FPoly prod{F->one()};
    int total = 0;
    for (int i = 0; i < 3; i++) {
      int d = 1 + (int)rng.below(3);
      FPoly u(d + 1, F->zero());
      u[d] = F->one();
      for (int j = 0; j < d; j++) u[j] = F->unrank(rng.below(25));
      prod = fp_mul(F, prod, u);
      total += d;
    }
    auto fac = fp_factor(F, prod, rng);
    FPoly back{F->one()};
    int degs = 0;
    for (auto& [u, m] : fac) {
      CHECK(fp_irreducible(F, u));
      for (int i = 0; i < m; i++) back = fp_mul(F, back, u);
      degs += m * fp_deg(u);
    }
    CHECK(degs == total);
    CHECK(fp_trim(F, back) == fp_monic(F, prod));
  }
}

static FElem det_gauss(const Field& F, std::vector<std::vector<FElem>> M) {
  size_t n = M.size();
  FElem det = F->one();
  for (size_t c = 0; c < n; c++) {
    size_t piv = c;
    while (piv < n && F->is_zero(M[piv][c])) piv++;
    if (piv == n) return F->zero();
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = F->neg(det);
    }
    det = F->mul(det, M[c][c]);
    FElem inv = F->inv(M[c][c]);
    for (size_t r = c + 1; r < n; r++) {
      if (F->is_zero(M[r][c])) continue;
      FElem f = F->mul(M[r][c], inv);
      for (size_t j = c; j < n; j++) M[r][j] = F->sub(M[r][j], F->mul(f, M[c][j]));
    }
  }
  return det;
}

TEST_CASE("bivariate resultant matches sylvester determinant at samples") {
  auto F = field_make(13, 1);
  Rng rng(2024);
  for (int trial = 0; trial < 8; trial++) {
    // random bivariate polynomials in (x0, x1), eliminate x1
    auto rand_poly = [&](int dx, int dy) {
      MPoly a = mp_zero(2);
      for (int i = 0; i <= dx; i++)
        for (int j = 0; j <= dy; j++)
          mp_set(F, a, {(uint16_t)i, (uint16_t)j}, F->unrank(rng.below(13)));
      return a;
    };
    MPoly A = rand_poly(2, 2), B = rand_poly(2, 1);
    int da = mp_deg_in(A, 1), db = mp_deg_in(B, 1);
    if (da < 1 || db < 1) continue;
    MPoly R = mp_resultant(F, A, B, 1);
    auto lcA = mp_coeffs_in(F, A, 1)[da], lcB = mp_coeffs_in(F, B, 1)[db];
    for (uint64_t x0 = 0; x0 < 13; x0++) {
      FElem v = F->unrank(x0);
      if (F->is_zero(mp_eval(F, lcA, {v, F->zero()}))) continue;
      if (F->is_zero(mp_eval(F, lcB, {v, F->zero()}))) continue;
      // build sylvester matrix of the specialised univariates
      auto spec = [&](const MPoly& P) {
        std::vector<FElem> c(mp_deg_in(P, 1) + 1, F->zero());
        for (auto& [e, coef] : P.t) {
          FElem term = F->mul(coef, F->pow_u64(v, e[0]));
          c[e[1]] = F->add(c[e[1]], term);
        }
        return c;
      };
      auto ca = spec(A), cb = spec(B);
      size_t n = da + db;
      std::vector<std::vector<FElem>> M(n, std::vector<FElem>(n, F->zero()));
      for (int i = 0; i < db; i++)
        for (int j = 0; j <= da; j++) M[i][i + j] = ca[da - j];
      for (int i = 0; i < da; i++)
        for (int j = 0; j <= db; j++) M[db + i][i + j] = cb[db - j];
      CHECK(det_gauss(F, M) == mp_eval(F, R, {v, F->zero()}));
    }
  }
}

TEST_CASE("multivariate helpers") {
  auto F = field_make(3, 1);
  // (x+y)^3 = x^3 + y^3 in char 3
  MPoly s = mp_add(F, mp_var(F, 2, 0), mp_var(F, 2, 1));
  MPoly cube = mp_pow(F, s, 3);
  CHECK(cube.t.size() == 2);
  CHECK(mp_is_homogeneous(cube));
  CHECK(mp_total_deg(cube) == 3);
  MPoly dx = mp_derivative(F, cube, 0);
  CHECK(mp_is_zero(dx));  // 3x^2 = 0

  // substitution identity f(x, y) with x -> x + y twice differs from once
  auto F7 = field_make(7, 1);
  MPoly f = mp_zero(2);
  mp_set(F7, f, {2, 1}, F7->from_int(3));
  mp_set(F7, f, {0, 2}, F7->from_int(5));
  std::vector<std::vector<FElem>> M = {{F7->one(), F7->one()}, {F7->zero(), F7->one()}};
  MPoly g = mp_subst_linear(F7, f, M);
  Rng rng(11);
  for (int i = 0; i < 20; i++) {
    FElem x = F7->unrank(rng.below(7)), y = F7->unrank(rng.below(7));
    CHECK(mp_eval(F7, g, {x, y}) == mp_eval(F7, f, {F7->add(x, y), y}));
  }
}
