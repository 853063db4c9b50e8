// Copyright 2026 The degreelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linalg.hpp"

namespace degreelab {

Mat mat_mul(const PrimeField &F, const Mat &x, const Mat &y) {
  if (x.cols != y.rows) throw InternalError("matrix shape mismatch in mul");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::int64_t xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(xik, y.at(k, j)));
    }
  return r;
}

Mat mat_transpose(const Mat &x) {
  Mat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

int row_reduce(const PrimeField &F, Mat &m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    std::int64_t inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = r + 1; i < m.rows; ++i) {
      std::int64_t f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

Mat rref(const PrimeField &F, Mat m, std::vector<int> *pivots) {
  int rk = row_reduce(F, m);
  std::vector<int> piv;
  piv.reserve(static_cast<size_t>(rk));
  for (int i = 0; i < rk; ++i) {
    int c = 0;
    while (c < m.cols && m.at(i, c) == 0) ++c;
    piv.push_back(c);
    for (int k = 0; k < i; ++k) {
      std::int64_t f = m.at(k, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(k, j) = F.sub(m.at(k, j), F.mul(f, m.at(i, j)));
    }
  }
  Mat out(rk, m.cols);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  if (pivots) *pivots = piv;
  return out;
}

Mat null_space(const PrimeField &F, const Mat &m) {
  std::vector<int> piv;
  Mat R = rref(F, m, &piv);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  Mat out(m.cols - R.rows, m.cols);
  int row = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    out.at(row, c) = 1;
    for (int i = 0; i < R.rows; ++i)
      out.at(row, piv[static_cast<size_t>(i)]) = F.neg(R.at(i, c));
    ++row;
  }
  return out;
}

std::optional<Mat> invert(const PrimeField &F, const Mat &m) {
  if (m.rows != m.cols) throw InternalError("inverting a non-square matrix");
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  Mat R = rref(F, aug, &piv);
  if (R.rows < n || piv[static_cast<size_t>(n - 1)] >= n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
  return inv;
}

std::int64_t determinant(const PrimeField &F, Mat m) {
  if (m.rows != m.cols) throw InternalError("determinant of non-square matrix");
  std::int64_t det = 1;
  int n = m.rows;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    std::int64_t inv = F.inv(m.at(c, c));
    for (int i = c + 1; i < n; ++i) {
      std::int64_t f = F.mul(m.at(i, c), inv);
      if (f == 0) continue;
      for (int j = c; j < n; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(c, j)));
    }
  }
  return det;
}

bool in_row_space(const PrimeField &F, const Mat &R,
                  const std::vector<int> &pivots, std::vector<std::int64_t> v) {
  for (int i = 0; i < R.rows; ++i) {
    std::int64_t f = v[static_cast<size_t>(pivots[static_cast<size_t>(i)])];
    if (f == 0) continue;
    for (int j = 0; j < R.cols; ++j)
      v[static_cast<size_t>(j)] = F.sub(v[static_cast<size_t>(j)], F.mul(f, R.at(i, j)));
  }
  for (std::int64_t x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace degreelab
