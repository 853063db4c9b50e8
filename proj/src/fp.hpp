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

#ifndef DEGREELAB_FP_HPP
#define DEGREELAB_FP_HPP

#include <cstdint>

#include "util.hpp"

namespace degreelab {

// Arithmetic in F_p.  Elements are int64 values reduced to [0, p).
// p stays below 2^31 so products fit in int64 without widening.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw DomainError("modulus must be a prime below 2^31");
  }

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    std::int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }

  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return (a * b) % p_;
  }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::int64_t inv(std::int64_t a) const {
    if (reduce(a) == 0) throw DomainError("inversion of zero in F_p");
    return pow(a, p_ - 2);
  }

  // Lift to the symmetric range (-p/2, p/2]; used by the canonical printer.
  std::int64_t symmetric(std::int64_t a) const {
    a = reduce(a);
    return a > p_ / 2 ? a - p_ : a;
  }

  bool operator==(const PrimeField &o) const { return p_ == o.p_; }

 private:
  std::int64_t p_;
};

}  // namespace degreelab

#endif  // DEGREELAB_FP_HPP
