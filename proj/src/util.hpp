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

#ifndef DEGREELAB_UTIL_HPP
#define DEGREELAB_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degreelab {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string &msg)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ": " + msg),
        line(line_), column(column_) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dual-route computation disagreed or an asserted identity failed.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError("integer overflow in multiplication");
  return r;
}

// C(a, b) with the conventions C(a, b) = 0 for b < 0 or a < b, C(a, 0) = 1.
inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  if (b == 0 || b == a) return 1;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r = checked_mul(r, a - b + i);
    r /= i;
  }
  return r;
}

// Deterministic 64-bit generator (splitmix64).  Used everywhere a seeded
// stream is needed; never the global C++ engines, whose distributions are
// not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw DomainError("uniform over empty range");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Derives an independent stream, e.g. per corpus item or per gin trial.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

// FNV-1a 64-bit digest of raw bytes, reported as "fnv1a64:<hex>".
std::string fnv1a64_hex(const std::string &bytes);

bool is_prime(std::int64_t p);

}  // namespace degreelab

#endif  // DEGREELAB_UTIL_HPP
