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

#ifndef DEGREELAB_LINALG_HPP
#define DEGREELAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fp.hpp"

namespace degreelab {

// Dense row-major matrix over F_p.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  std::int64_t &at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  bool operator==(const Mat &o) const = default;
};

Mat mat_mul(const PrimeField &F, const Mat &x, const Mat &y);
Mat mat_transpose(const Mat &x);

// In-place reduction to row echelon form; returns the rank.
int row_reduce(const PrimeField &F, Mat &m);

inline int rank(const PrimeField &F, Mat m) { return row_reduce(F, m); }

// Reduced row echelon form with the zero rows dropped; pivots get value 1
// and their columns are cleared.  `pivots`, if non-null, receives the pivot
// column of each surviving row.
Mat rref(const PrimeField &F, Mat m, std::vector<int> *pivots = nullptr);

// Basis of the right null space, one solution per row of the result.
Mat null_space(const PrimeField &F, const Mat &m);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> invert(const PrimeField &F, const Mat &m);

std::int64_t determinant(const PrimeField &F, Mat m);

// Whether v lies in the row space of an rref matrix R (as produced above).
bool in_row_space(const PrimeField &F, const Mat &R,
                  const std::vector<int> &pivots, std::vector<std::int64_t> v);

}  // namespace degreelab

#endif  // DEGREELAB_LINALG_HPP
