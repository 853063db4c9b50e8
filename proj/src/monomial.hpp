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

#ifndef DEGREELAB_MONOMIAL_HPP
#define DEGREELAB_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "util.hpp"

namespace degreelab {

// Exponent-vector monomial with cached total degree.  Exponents are
// fixed-width 16-bit values; arithmetic that would overflow them throws.
class Monomial {
 public:
  explicit Monomial(int nvars) : exps_(nvars, 0), deg_(0) {}

  static Monomial variable(int nvars, int index) {
    Monomial m(nvars);
    m.exps_[static_cast<size_t>(index)] = 1;
    m.deg_ = 1;
    return m;
  }

  static Monomial from_exponents(const std::vector<int> &exps) {
    Monomial m(static_cast<int>(exps.size()));
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] >= (1 << 16))
        throw DomainError("exponent outside [0, 2^16)");
      m.exps_[i] = static_cast<std::uint16_t>(exps[i]);
      m.deg_ += static_cast<std::uint32_t>(exps[i]);
    }
    return m;
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[static_cast<size_t>(i)]; }
  int degree() const { return static_cast<int>(deg_); }
  bool is_one() const { return deg_ == 0; }

  // Largest variable index (1-based) dividing the monomial; 0 for 1.
  int range() const {
    for (int i = nvars() - 1; i >= 0; --i)
      if (exps_[static_cast<size_t>(i)] > 0) return i + 1;
    return 0;
  }

  Monomial times(const Monomial &o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i) {
      std::uint32_t e = static_cast<std::uint32_t>(exps_[i]) + o.exps_[i];
      if (e >= (1u << 16)) throw DomainError("monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  Monomial times_var(int i, int k = 1) const {
    Monomial r = *this;
    std::uint32_t e = static_cast<std::uint32_t>(r.exps_[static_cast<size_t>(i)]) +
                      static_cast<std::uint32_t>(k);
    if (e >= (1u << 16)) throw DomainError("monomial exponent overflow");
    r.exps_[static_cast<size_t>(i)] = static_cast<std::uint16_t>(e);
    r.deg_ += static_cast<std::uint32_t>(k);
    return r;
  }

  bool divides(const Monomial &o) const {
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Pre: this divides o.
  Monomial quotient_into(const Monomial &o) const {
    Monomial r(nvars());
    for (size_t i = 0; i < exps_.size(); ++i)
      r.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  // Divides out every power of variable i.
  Monomial without_var(int i) const {
    Monomial r = *this;
    r.deg_ -= r.exps_[static_cast<size_t>(i)];
    r.exps_[static_cast<size_t>(i)] = 0;
    return r;
  }

  // Reinterprets in a ring with fewer variables; trailing exponents must
  // be zero.
  Monomial truncated(int nvars_new) const {
    for (int i = nvars_new; i < nvars(); ++i)
      if (exps_[static_cast<size_t>(i)] != 0)
        throw InternalError("truncating a monomial with live tail variables");
    Monomial r(nvars_new);
    for (int i = 0; i < nvars_new; ++i) r.exps_[static_cast<size_t>(i)] = exps_[static_cast<size_t>(i)];
    r.deg_ = deg_;
    return r;
  }

  Monomial widened(int nvars_new) const {
    Monomial r(nvars_new);
    for (int i = 0; i < nvars(); ++i) r.exps_[static_cast<size_t>(i)] = exps_[static_cast<size_t>(i)];
    r.deg_ = deg_;
    return r;
  }

  static Monomial lcm(const Monomial &a, const Monomial &b) {
    Monomial r(a.nvars());
    std::uint32_t d = 0;
    for (size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      d += r.exps_[i];
    }
    r.deg_ = d;
    return r;
  }

  static bool coprime(const Monomial &a, const Monomial &b) {
    for (size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial &o) const { return exps_ == o.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
  std::uint32_t deg_;
};

// Graded reverse-lexicographic order: higher total degree is greater;
// within a degree, m1 > m2 iff at the largest index where they differ m1
// has the smaller exponent.
inline std::strong_ordering cmp_rlex(const Monomial &a, const Monomial &b) {
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// Pure lexicographic order (no degree sort): m1 > m2 iff at the first
// index where they differ m1 has the larger exponent.
inline std::strong_ordering cmp_lex(const Monomial &a, const Monomial &b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

inline bool rlex_less(const Monomial &a, const Monomial &b) {
  return cmp_rlex(a, b) == std::strong_ordering::less;
}

inline bool lex_less(const Monomial &a, const Monomial &b) {
  return cmp_lex(a, b) == std::strong_ordering::less;
}

// Enumerates all monomials of the given total degree in `nvars` variables,
// in a fixed (lexicographic-by-exponent-vector) order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Number of monomials of degree exactly d, resp. at most d.
inline std::int64_t count_monomials(int nvars, int degree) {
  return binomial(nvars - 1 + degree, degree);
}
inline std::int64_t count_monomials_upto(int nvars, int degree) {
  return binomial(nvars + degree, degree);
}

std::string monomial_to_string(const Monomial &m,
                               const std::vector<std::string> &names);

}  // namespace degreelab

#endif  // DEGREELAB_MONOMIAL_HPP
