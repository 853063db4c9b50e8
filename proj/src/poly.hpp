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

#ifndef DEGREELAB_POLY_HPP
#define DEGREELAB_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fp.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "util.hpp"

namespace degreelab {

struct Ring {
  int n = 0;
  std::int64_t p = 32003;
  std::vector<std::string> names;

  Ring() = default;
  Ring(int n_, std::int64_t p_, std::vector<std::string> names_ = {})
      : n(n_), p(p_), names(std::move(names_)) {
    if (n < 0) throw DomainError("variable count must be non-negative");
    if (names.empty())
      for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (static_cast<int>(names.size()) != n)
      throw DomainError("ring needs one name per variable");
    for (size_t i = 0; i < names.size(); ++i)
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw DomainError("variable names must be pairwise distinct");
    if (!is_prime(p) || p <= 2) throw DomainError("characteristic must be an odd prime");
    (void)PrimeField(p);
  }

  PrimeField field() const { return PrimeField(p); }

  bool operator==(const Ring &o) const { return n == o.n && p == o.p; }
};

struct Term {
  Monomial mono;
  std::int64_t coef;  // nonzero, reduced mod p
};

// Sparse polynomial; terms kept rlex-descending so the leading term is
// front().  Immutable in practice: operations return fresh values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Poly zero() { return Poly(); }
  static Poly from_monomial(const Monomial &m, std::int64_t c = 1) {
    return Poly({Term{m, c}});
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term> &terms() const { return terms_; }
  const Term &leading() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return terms_.front();
  }

  // Total degree of the leading term (= of every term when homogeneous).
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.front().mono.degree();
    for (const Term &t : terms_)
      if (t.mono.degree() != d) return std::nullopt;
    return d;
  }

  bool operator==(const Poly &o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) ||
          terms_[i].coef != o.terms_[i].coef)
        return false;
    return true;
  }

 private:
  std::vector<Term> terms_;
};

// Builds a polynomial from unordered, possibly repeated terms.
Poly poly_normalize(const PrimeField &F, std::vector<Term> terms);

Poly poly_add(const PrimeField &F, const Poly &a, const Poly &b);
Poly poly_sub(const PrimeField &F, const Poly &a, const Poly &b);
Poly poly_scale(const PrimeField &F, const Poly &a, std::int64_t c);
Poly poly_mul_term(const PrimeField &F, const Poly &a, const Monomial &m,
                   std::int64_t c);
Poly poly_mul(const PrimeField &F, const Poly &a, const Poly &b);
Poly poly_monic(const PrimeField &F, const Poly &a);

std::string poly_to_string(const Ring &ring, const Poly &a);

// Invertible linear change of coordinates with cached inverse.
struct CoordinateChange {
  Mat mat;  // row i = image of variable i as a linear form
  Mat inv;
};

// Substitutes each variable by its image row: x_i -> sum_j mat(i,j) x_j.
Poly apply_change(const Ring &ring, const Poly &f, const CoordinateChange &s);

// apply(compose(s, t), f) == apply(s, apply(t, f)).
CoordinateChange compose(const Ring &ring, const CoordinateChange &s,
                         const CoordinateChange &t);

CoordinateChange identity_change(const Ring &ring);

// Uniform random entries, resampled until invertible (at most 64 attempts).
// Deterministic for a fixed seed.
CoordinateChange random_change(const Ring &ring, std::uint64_t seed,
                               int *attempts = nullptr);

// Random nonzero linear form with uniform coefficients.
Poly random_linear_form(const Ring &ring, Rng &rng);

}  // namespace degreelab

#endif  // DEGREELAB_POLY_HPP
