/*
   Copyright 2026 The skewtor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewtor/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "skewtor/error.hpp"

namespace skewtor::lattice {
namespace {

Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(Mat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= q * m[src][k];
}

void col_axpy(Mat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void swap_cols(Mat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

QMat inverse(QMat a) {
  std::size_t n = a.size();
  QMat inv(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) fail(ErrorKind::Inconsistent, "singular Gram matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    mpq_class piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

mpz_class round_q(const mpq_class& x) {
  mpq_class h = x + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

mpz_class max_norm(const Vec& v) {
  mpz_class m = 0;
  for (const auto& x : v) m = std::max(m, mpz_class(abs(x)));
  return m;
}

bool better(const Vec& a, const Vec& b) {
  mpz_class na = max_norm(a), nb = max_norm(b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

DiagonalForm diagonalize(const Mat& A, std::size_t cols) {
  std::size_t rows = A.size();
  DiagonalForm f{A, identity(rows), identity(cols), 0};
  Mat& D = f.D;
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(D[t], D[pi]);
    std::swap(f.U[t], f.U[pi]);
    swap_cols(D, t, pj);
    swap_cols(f.V, t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        row_axpy(D, i, t, q);
        row_axpy(f.U, i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        col_axpy(D, j, t, q);
        col_axpy(f.V, j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (clean) break;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) bi = i, bj = t;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) bi = t, bj = j;
      if (bi != t) {
        std::swap(D[t], D[bi]);
        std::swap(f.U[t], f.U[bi]);
      }
      if (bj != t) {
        swap_cols(D, t, bj);
        swap_cols(f.V, t, bj);
      }
    }
    ++t;
  }
  f.rank = t;
  return f;
}

std::optional<SolutionSet> solve(const Mat& A, const Vec& b, std::size_t cols) {
  std::size_t rows = A.size();
  DiagonalForm f = diagonalize(A, cols);
  Vec c(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) c[i] += f.U[i][k] * b[k];
  Vec y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < f.rank) {
      if (c[i] % f.D[i][i] != 0) return std::nullopt;
      y[i] = c[i] / f.D[i][i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  SolutionSet s;
  s.particular.assign(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < cols; ++k) s.particular[i] += f.V[i][k] * y[k];
  for (std::size_t k = f.rank; k < cols; ++k) {
    Vec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = f.V[i][k];
    s.kernel.push_back(std::move(v));
  }
  return s;
}

Mat lattice_basis(const Mat& gens, std::size_t dim) {
  Mat m = gens;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < m.size(); ++col) {
    while (true) {
      std::size_t piv = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 && (piv == m.size() || abs(m[i][col]) < abs(m[piv][col])))
          piv = i;
      if (piv == m.size()) break;
      std::swap(m[r], m[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[r][col].get_mpz_t());
        row_axpy(m, i, r, q);
        if (m[i][col] != 0) clean = false;
      }
      if (clean) {
        ++r;
        break;
      }
    }
  }
  m.resize(r);
  return m;
}

Mat lll_reduce(Mat b) {
  std::size_t k = b.size();
  if (k < 2) return b;
  std::size_t n = b[0].size();
  auto dot = [&](const QVec& x, const QVec& y) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };
  auto gram_schmidt = [&](QMat& bs, QMat& mu, QVec& norms) {
    bs.assign(k, QVec(n));
    mu.assign(k, QVec(k, 0));
    norms.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t t = 0; t < n; ++t) bs[i][t] = b[i][t];
      for (std::size_t j = 0; j < i; ++j) {
        QVec bi(n);
        for (std::size_t t = 0; t < n; ++t) bi[t] = b[i][t];
        mu[i][j] = dot(bi, bs[j]) / norms[j];
        for (std::size_t t = 0; t < n; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
      }
      norms[i] = dot(bs[i], bs[i]);
    }
  };
  QMat bs, mu;
  QVec norms;
  gram_schmidt(bs, mu, norms);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t jj = i; jj-- > 0;) {
      mpz_class r = round_q(mu[i][jj]);
      if (r != 0) {
        for (std::size_t t = 0; t < n; ++t) b[i][t] -= r * b[jj][t];
        gram_schmidt(bs, mu, norms);
      }
    }
    if (norms[i] >= (mpq_class(3, 4) - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt(bs, mu, norms);
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  return b;
}

std::optional<Vec> closest_to_origin(const Vec& x0, const Mat& basis,
                                     std::size_t cap) {
  std::size_t r = basis.size();
  if (r == 0) return x0;
  std::size_t n = x0.size();
  // P = (B B^T)^{-1} B maps a lattice displacement to its coordinates.
  QMat gram(r, QVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t t = 0; t < n; ++t) gram[i][j] += basis[i][t] * basis[j][t];
  QMat ginv = inverse(gram);
  QMat P(r, QVec(n, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < r; ++j) P[i][t] += ginv[i][j] * basis[j][t];

  Vec x1 = x0;
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class c = 0;
    for (std::size_t t = 0; t < n; ++t) c -= P[i][t] * x0[t];
    mpz_class ci = round_q(c);
    for (std::size_t t = 0; t < n; ++t) x1[t] += ci * basis[i][t];
  }
  // Any better point d satisfies |d - x1| <= 2R, hence |c_i| <= 2R sum_t |P_it|.
  mpz_class R = max_norm(x1);
  std::vector<long> bound(r);
  mpz_class box = 1;
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class s = 0;
    for (std::size_t t = 0; t < n; ++t) s += abs(P[i][t]);
    s *= 2 * R;
    mpz_class bi;
    mpz_fdiv_q(bi.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    box *= 2 * bi + 1;
    if (box > cap) return std::nullopt;
    bound[i] = bi.get_si();
  }
  Vec best = x1;
  std::vector<long> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = -bound[i];
  while (true) {
    Vec d = x1;
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0)
        for (std::size_t t = 0; t < n; ++t) d[t] += c[i] * basis[i][t];
    if (better(d, best)) best = d;
    std::size_t i = 0;
    while (i < r && c[i] == bound[i]) c[i] = -bound[i], ++i;
    if (i == r) break;
    ++c[i];
  }
  return best;
}

Vec coprime_base(const Vec& values) {
  Vec s;
  for (const auto& v : values)
    if (abs(v) > 1) s.push_back(abs(v));
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t i = 0; i < s.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < s.size() && !changed; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), s[i].get_mpz_t(), s[j].get_mpz_t());
        if (g == 1) continue;
        mpz_class a = s[i] / g, b = s[j] / g;
        s.erase(s.begin() + j);
        s.erase(s.begin() + i);
        for (const auto& x : {a, b, g})
          if (x > 1) s.push_back(x);
        changed = true;
      }
  }
  std::sort(s.begin(), s.end());
  return s;
}

long valuation(mpz_class v, const mpz_class& base) {
  v = abs(v);
  long k = 0;
  if (v == 0) return 0;
  while (v % base == 0) {
    v /= base;
    ++k;
  }
  return k;
}

}  // namespace skewtor::lattice
