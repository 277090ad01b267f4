#include <algorithm>
#include <map>
#include <tuple>

#include "core/err.hpp"
#include "core/field.hpp"
#include "core/fieldpoly.hpp"
#include "core/nt.hpp"
#include "core/rng.hpp"

namespace zetafn {

namespace {

// Row-reduced solver for M y = x over F_p, M given by columns.
struct FpSolver {
  uint32_t p;
  size_t rows, cols;
  std::vector<std::vector<uint32_t>> R;  // echelon form of M, rows x cols
  std::vector<std::vector<uint32_t>> T;  // transform with R = T * M
  std::vector<int> pivot_col;            // per row, -1 past rank

  void build(uint32_t p_, const std::vector<std::vector<uint32_t>>& columns, size_t nrows) {
    p = p_;
    rows = nrows;
    cols = columns.size();
    R.assign(rows, std::vector<uint32_t>(cols, 0));
    T.assign(rows, std::vector<uint32_t>(rows, 0));
    for (size_t i = 0; i < rows; i++) T[i][i] = 1;
    for (size_t j = 0; j < cols; j++)
      for (size_t i = 0; i < rows; i++) R[i][j] = columns[j][i];
    pivot_col.assign(rows, -1);
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; j++) {
      size_t piv = r;
      while (piv < rows && R[piv][j] == 0) piv++;
      if (piv == rows) continue;
      std::swap(R[piv], R[r]);
      std::swap(T[piv], T[r]);
      uint64_t inv = powmod_u64(R[r][j], p - 2, p);
      for (size_t jj = 0; jj < cols; jj++) R[r][jj] = (uint32_t)(R[r][jj] * inv % p);
      for (size_t jj = 0; jj < rows; jj++) T[r][jj] = (uint32_t)(T[r][jj] * inv % p);
      for (size_t i = 0; i < rows; i++) {
        if (i == r || R[i][j] == 0) continue;
        uint64_t f = R[i][j];
        for (size_t jj = 0; jj < cols; jj++)
          R[i][jj] = (uint32_t)((R[i][jj] + (p - f) * R[r][jj]) % p);
        for (size_t jj = 0; jj < rows; jj++)
          T[i][jj] = (uint32_t)((T[i][jj] + (p - f) * T[r][jj]) % p);
      }
      pivot_col[r] = (int)j;
      r++;
    }
  }

  // Solve M y = x; empty optional when inconsistent.
  std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& x) const {
    std::vector<uint32_t> tx(rows, 0);
    for (size_t i = 0; i < rows; i++) {
      uint64_t acc = 0;
      for (size_t j = 0; j < rows; j++) acc += (uint64_t)T[i][j] * x[j] % p;
      tx[i] = (uint32_t)(acc % p);
    }
    std::vector<uint32_t> y(cols, 0);
    for (size_t i = 0; i < rows; i++) {
      if (pivot_col[i] < 0) {
        if (tx[i]) return std::nullopt;
        continue;
      }
      y[pivot_col[i]] = tx[i];
    }
    // verify rows without pivots already covered; free columns stay zero,
    // which is fine because our matrices have full column rank
    return y;
  }
};

struct EmbedData {
  FElem root;                  // image of the small generator in the big field
  std::vector<FElem> gen_pow;  // root^i, i < k_small
  FpSolver down;
};

std::map<std::tuple<uint32_t, uint32_t, uint32_t>, EmbedData>& embed_cache() {
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, EmbedData> m;
  return m;
}

const EmbedData& get_embed(const Field& from, const Field& to) {
  if (from->p != to->p || to->k % from->k) fail(Err::WrongField, "not a field extension");
  auto key = std::make_tuple(from->p, from->k, to->k);
  auto& cache = embed_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  FPoly mod(from->modulus.size());
  for (size_t i = 0; i < mod.size(); i++) mod[i] = to->from_int(from->modulus[i]);
  Rng rng(fnv1a64("field-embedding"));
  auto roots = fp_roots(to, mod, rng);
  if (roots.empty()) fail(Err::Internal, "modulus has no root in the extension");
  EmbedData d;
  d.root = roots.front().first;  // minimal-rank root, fixed per process
  d.gen_pow.resize(from->k);
  FElem w = to->one();
  for (uint32_t i = 0; i < from->k; i++) {
    d.gen_pow[i] = w;
    w = to->mul(w, d.root);
  }
  std::vector<std::vector<uint32_t>> cols(from->k);
  for (uint32_t i = 0; i < from->k; i++) cols[i] = d.gen_pow[i];
  d.down.build(from->p, cols, to->k);
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

FElem embed_up(const Field& from, const Field& to, const FElem& x) {
  if (from->k == to->k) {
    if (from->p != to->p) fail(Err::WrongField, "characteristic mismatch");
    return x;
  }
  const EmbedData& d = get_embed(from, to);
  FElem acc = to->zero();
  for (uint32_t i = 0; i < from->k; i++) {
    if (!x[i]) continue;
    FElem t = d.gen_pow[i];
    for (auto& c : t) c = (uint32_t)((uint64_t)c * x[i] % to->p);
    acc = to->add(acc, t);
  }
  return acc;
}

FElem project_down(const Field& from, const Field& to, const FElem& x) {
  if (from->k == to->k) return x;
  const EmbedData& d = get_embed(from, to);
  auto y = d.down.solve(x);
  if (!y) fail(Err::WrongField, "element not in the subfield");
  return *y;
}

unsigned exact_degree(const Field& base, const Field& big, const FElem& x) {
  if (big->k % base->k) fail(Err::WrongField, "not an extension of the base");
  unsigned n = big->k / base->k;
  for (unsigned e = 1; e <= n; e++) {
    if (n % e) continue;
    if (big->eq(frob_over(base, big, x, e), x)) return e;
  }
  fail(Err::Internal, "frobenius orbit does not close");
}

std::vector<FElem> rel_coords(const Field& base, const Field& big, const FElem& x) {
  if (big->k % base->k) fail(Err::WrongField, "not an extension of the base");
  unsigned e = big->k / base->k;
  if (e == 1) return {x};
  static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, FpSolver> cache;
  auto key = std::make_tuple(base->p, base->k, big->k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    // columns: embed(alpha^i) * beta^j, beta the class of T in `big`
    std::vector<std::vector<uint32_t>> cols;
    cols.reserve(big->k);
    FElem beta_j = big->one();
    for (unsigned j = 0; j < e; j++) {
      for (unsigned i = 0; i < base->k; i++) {
        FElem alpha_i = base->zero();
        alpha_i[i] = 1;
        cols.push_back(big->mul(embed_up(base, big, alpha_i), beta_j));
      }
      beta_j = big->mul(beta_j, big->gen());
    }
    FpSolver s;
    s.build(base->p, cols, big->k);
    it = cache.emplace(key, std::move(s)).first;
  }
  auto y = it->second.solve(x);
  if (!y) fail(Err::Internal, "relative basis is not spanning");
  std::vector<FElem> out(e, base->zero());
  for (unsigned j = 0; j < e; j++)
    for (unsigned i = 0; i < base->k; i++) out[j][i] = (*y)[j * base->k + i];
  return out;
}

}  // namespace zetafn
