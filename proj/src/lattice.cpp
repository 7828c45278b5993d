#include "sfg/lattice.hpp"

#include <utility>

#include "sfg/error.hpp"

namespace sfg {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a / b for b > 0.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_class num = 2 * a + b;
  mpz_class den = 2 * b;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace

void lll_reduce(IntMatrix& b) {
  const std::size_t n = b.size();
  if (n <= 1) return;
  // 1-based bookkeeping: d[0..n], lambda[i][j] for j < i.
  std::vector<mpz_class> d(n + 1, 0);
  IntMatrix lam(n + 1, std::vector<mpz_class>(n + 1, 0));
  auto B = [&](std::size_t i) -> std::vector<mpz_class>& { return b[i - 1]; };
  d[0] = 1;
  d[1] = dot(B(1), B(1));
  if (d[1] == 0) throw Error(ErrorKind::InvalidArgument, "LLL input rows are dependent");
  std::size_t k = 2, kmax = 1;

  auto red = [&](std::size_t kk, std::size_t l) {
    if (2 * abs(lam[kk][l]) <= d[l]) return;
    const mpz_class q = round_div(lam[kk][l], d[l]);
    for (std::size_t c = 0; c < B(kk).size(); ++c) B(kk)[c] -= q * B(l)[c];
    lam[kk][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };

  auto swap_step = [&](std::size_t kk) {
    std::swap(B(kk), B(kk - 1));
    for (std::size_t j = 1; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const mpz_class l = lam[kk][kk - 1];
    const mpz_class nb = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      const mpz_class t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (nb * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = nb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(B(k), B(j));
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw Error(ErrorKind::InvalidArgument, "LLL input rows are dependent");
    }
    red(k, k - 1);
    if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      swap_step(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  s.D = a;
  s.U = identity_matrix(m);
  s.V = identity_matrix(n);
  s.Vinv = identity_matrix(n);
  auto& A = s.D;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(A[i], A[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (auto& r : A) std::swap(r[i], r[j]);
    for (auto& r : s.V) std::swap(r[i], r[j]);
    std::swap(s.Vinv[i], s.Vinv[j]);
  };
  // row_i -= q row_j
  auto row_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < n; ++c) A[i][c] -= q * A[j][c];
    for (std::size_t c = 0; c < m; ++c) s.U[i][c] -= q * s.U[j][c];
  };
  // col_i -= q col_j
  auto col_sub = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < m; ++r) A[r][i] -= q * A[r][j];
    for (std::size_t r = 0; r < n; ++r) s.V[r][i] -= q * s.V[r][j];
    for (std::size_t c = 0; c < n; ++c) s.Vinv[j][c] += q * s.Vinv[i][c];
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest nonzero entry in the remaining block.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A[i][j] != 0 && (!found || abs(A[i][j]) < abs(A[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        row_sub(i, t, q);
        if (A[i][t] != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_sub(j, t, q);
        if (A[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n && clean; ++j)
          if (!mpz_divisible_p(A[i][j].get_mpz_t(), A[t][t].get_mpz_t())) {
            row_sub(t, i, -1);
            clean = false;
          }
    }
    if (A[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) A[t][c] = -A[t][c];
      for (std::size_t c = 0; c < m; ++c) s.U[t][c] = -s.U[t][c];
    }
    ++t;
  }
  s.rank = static_cast<int>(t);
  return s;
}

IntMatrix saturate(const IntMatrix& rows) {
  if (rows.empty()) return {};
  const SmithForm s = smith_normal_form(rows);
  IntMatrix out;
  for (int i = 0; i < s.rank; ++i) out.push_back(s.Vinv[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace sfg
