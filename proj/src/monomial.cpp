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

#include "monomial.hpp"

namespace degreelab {

static void enumerate_rec(int nvars, int degree, int pos, std::vector<int> &acc,
                          std::vector<Monomial> &out) {
  if (pos == nvars - 1) {
    acc[static_cast<size_t>(pos)] = degree;
    out.push_back(Monomial::from_exponents(acc));
    return;
  }
  for (int e = degree; e >= 0; --e) {
    acc[static_cast<size_t>(pos)] = e;
    enumerate_rec(nvars, degree - e, pos + 1, acc, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(0));
    return out;
  }
  std::vector<int> acc(static_cast<size_t>(nvars), 0);
  enumerate_rec(nvars, degree, 0, acc, out);
  return out;
}

std::string monomial_to_string(const Monomial &m,
                               const std::vector<std::string> &names) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace degreelab
