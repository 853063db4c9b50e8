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

#include "poly.hpp"

#include <algorithm>

namespace degreelab {

Poly poly_normalize(const PrimeField &F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    return rlex_less(b.mono, a.mono);
  });
  std::vector<Term> out;
  for (Term &t : terms) {
    std::int64_t c = F.reduce(t.coef);
    if (c == 0) continue;
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = F.add(out.back().coef, c);
      if (out.back().coef == 0) out.pop_back();
    } else {
      out.push_back(Term{t.mono, c});
    }
  }
  return Poly(std::move(out));
}

Poly poly_add(const PrimeField &F, const Poly &a, const Poly &b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto &ta = a.terms();
  const auto &tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    auto c = cmp_rlex(ta[i].mono, tb[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(ta[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(tb[j++]);
    } else {
      std::int64_t s = F.add(ta[i].coef, tb[j].coef);
      if (s != 0) out.push_back(Term{ta[i].mono, s});
      ++i;
      ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  return Poly(std::move(out));
}

Poly poly_scale(const PrimeField &F, const Poly &a, std::int64_t c) {
  c = F.reduce(c);
  if (c == 0) return Poly::zero();
  std::vector<Term> out = a.terms();
  for (Term &t : out) t.coef = F.mul(t.coef, c);
  return Poly(std::move(out));
}

Poly poly_sub(const PrimeField &F, const Poly &a, const Poly &b) {
  return poly_add(F, a, poly_scale(F, b, F.modulus() - 1));
}

Poly poly_mul_term(const PrimeField &F, const Poly &a, const Monomial &m,
                   std::int64_t c) {
  c = F.reduce(c);
  if (c == 0) return Poly::zero();
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const Term &t : a.terms())
    out.push_back(Term{t.mono.times(m), F.mul(t.coef, c)});
  return Poly(std::move(out));  // multiplicative order keeps terms sorted
}

Poly poly_mul(const PrimeField &F, const Poly &a, const Poly &b) {
  Poly acc;
  for (const Term &t : b.terms())
    acc = poly_add(F, acc, poly_mul_term(F, a, t.mono, t.coef));
  return acc;
}

Poly poly_monic(const PrimeField &F, const Poly &a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.leading().coef));
}

std::string poly_to_string(const Ring &ring, const Poly &a) {
  if (a.is_zero()) return "0";
  PrimeField F = ring.field();
  std::string out;
  for (const Term &t : a.terms()) {
    std::int64_t c = F.symmetric(t.coef);
    bool neg = c < 0;
    std::int64_t abs = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (t.mono.is_one()) {
      out += std::to_string(abs);
    } else {
      if (abs != 1) out += std::to_string(abs) + "*";
      out += monomial_to_string(t.mono, ring.names);
    }
  }
  return out;
}

Poly apply_change(const Ring &ring, const Poly &f, const CoordinateChange &s) {
  PrimeField F = ring.field();
  // Images of the variables as linear polynomials.
  std::vector<Poly> image;
  image.reserve(static_cast<size_t>(ring.n));
  for (int i = 0; i < ring.n; ++i) {
    std::vector<Term> ts;
    for (int j = 0; j < ring.n; ++j) {
      std::int64_t c = s.mat.at(i, j);
      if (c != 0) ts.push_back(Term{Monomial::variable(ring.n, j), c});
    }
    image.push_back(poly_normalize(F, std::move(ts)));
  }
  Poly acc;
  for (const Term &t : f.terms()) {
    Poly prod = Poly::from_monomial(Monomial(ring.n), t.coef);
    for (int i = 0; i < ring.n; ++i)
      for (int e = 0; e < t.mono.exponent(i); ++e)
        prod = poly_mul(F, prod, image[static_cast<size_t>(i)]);
    acc = poly_add(F, acc, prod);
  }
  return acc;
}

CoordinateChange compose(const Ring &ring, const CoordinateChange &s,
                         const CoordinateChange &t) {
  PrimeField F = ring.field();
  // Substituting t then s replaces x by t.mat * (s.mat * x).
  CoordinateChange r;
  r.mat = mat_mul(F, t.mat, s.mat);
  r.inv = mat_mul(F, s.inv, t.inv);
  return r;
}

CoordinateChange identity_change(const Ring &ring) {
  CoordinateChange s;
  s.mat = Mat(ring.n, ring.n);
  for (int i = 0; i < ring.n; ++i) s.mat.at(i, i) = 1;
  s.inv = s.mat;
  return s;
}

CoordinateChange random_change(const Ring &ring, std::uint64_t seed,
                               int *attempts) {
  PrimeField F = ring.field();
  Rng rng(seed);
  for (int attempt = 1; attempt <= 64; ++attempt) {
    Mat m(ring.n, ring.n);
    for (int i = 0; i < ring.n; ++i)
      for (int j = 0; j < ring.n; ++j)
        m.at(i, j) = static_cast<std::int64_t>(
            rng.uniform(static_cast<std::uint64_t>(ring.p)));
    if (auto inv = invert(F, m)) {
      if (attempts) *attempts = attempt;
      return CoordinateChange{std::move(m), std::move(*inv)};
    }
  }
  throw InternalError("no invertible matrix in 64 samples");
}

Poly random_linear_form(const Ring &ring, Rng &rng) {
  PrimeField F = ring.field();
  for (;;) {
    std::vector<Term> ts;
    for (int j = 0; j < ring.n; ++j) {
      std::int64_t c = static_cast<std::int64_t>(
          rng.uniform(static_cast<std::uint64_t>(ring.p)));
      if (c != 0) ts.push_back(Term{Monomial::variable(ring.n, j), c});
    }
    Poly f = poly_normalize(F, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

}  // namespace degreelab
