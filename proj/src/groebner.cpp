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

#include "groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace degreelab {

IdealPresentation make_ideal(const Ring &ring, std::vector<Poly> gens) {
  std::vector<Poly> kept;
  for (Poly &g : gens) {
    if (g.is_zero()) continue;
    if (!g.homogeneous_degree().has_value())
      throw DomainError("generators must be homogeneous");
    kept.push_back(std::move(g));
  }
  return IdealPresentation{ring, std::move(kept)};
}

IdealPresentation apply_change(const IdealPresentation &I,
                               const CoordinateChange &sigma) {
  std::vector<Poly> gens;
  gens.reserve(I.gens.size());
  for (const Poly &g : I.gens) gens.push_back(apply_change(I.ring, g, sigma));
  return IdealPresentation{I.ring, std::move(gens)};
}

Poly normal_form(const Ring &ring, const Poly &f, const std::vector<Poly> &G) {
  PrimeField F = ring.field();
  Poly work = f;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term &lt = work.leading();
    const Poly *reducer = nullptr;
    for (const Poly &g : G)
      if (!g.is_zero() && g.leading().mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      const Term &glt = reducer->leading();
      Monomial q = glt.mono.quotient_into(lt.mono);
      std::int64_t c = F.mul(lt.coef, F.inv(glt.coef));
      work = poly_sub(F, work, poly_mul_term(F, *reducer, q, c));
    } else {
      remainder.push_back(lt);
      work = poly_sub(F, work, Poly::from_monomial(lt.mono, lt.coef));
    }
  }
  return Poly(std::move(remainder));  // collected in descending order
}

Poly normal_form(const Poly &f, const GroebnerBasis &G) {
  return normal_form(G.ring, f, G.elements);
}

namespace {

struct Pair {
  size_t i, j;
  int degree;  // of lcm of leading monomials
};

Poly s_poly(const PrimeField &F, const Poly &f, const Poly &g) {
  Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
  Poly a = poly_mul_term(F, f, f.leading().mono.quotient_into(l),
                         F.inv(f.leading().coef));
  Poly b = poly_mul_term(F, g, g.leading().mono.quotient_into(l),
                         F.inv(g.leading().coef));
  return poly_sub(F, a, b);
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation &I) {
  const Ring &ring = I.ring;
  PrimeField F = ring.field();

  std::vector<Poly> basis;
  for (const Poly &g : I.gens)
    if (!g.is_zero()) basis.push_back(poly_monic(F, g));
  std::sort(basis.begin(), basis.end(), [](const Poly &a, const Poly &b) {
    return rlex_less(a.leading().mono, b.leading().mono);
  });

  std::deque<Pair> queue;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading().mono, basis[j].leading().mono);
      queue.push_back(Pair{i, j, l.degree()});
    }
    std::stable_sort(queue.begin(), queue.end(),
                     [](const Pair &a, const Pair &b) { return a.degree < b.degree; });
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair pr = queue.front();
    queue.pop_front();
    const Poly &f = basis[pr.i];
    const Poly &g = basis[pr.j];
    if (Monomial::coprime(f.leading().mono, g.leading().mono)) continue;
    Poly r = normal_form(ring, s_poly(F, f, g), basis);
    if (!r.is_zero()) {
      basis.push_back(poly_monic(F, r));
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool covered = false;
    for (size_t j = 0; j < basis.size() && !covered; ++j) {
      if (i == j) continue;
      const Monomial &mi = basis[i].leading().mono;
      const Monomial &mj = basis[j].leading().mono;
      if (mj.divides(mi) && !(mi == mj && j > i)) covered = true;
    }
    if (!covered) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails for the unique reduced basis.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(ring, minimal[i], others);
    if (!r.is_zero()) reduced.push_back(poly_monic(F, r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly &a, const Poly &b) {
    return rlex_less(a.leading().mono, b.leading().mono);
  });

  std::vector<Monomial> lead;
  lead.reserve(reduced.size());
  for (const Poly &g : reduced) lead.push_back(g.leading().mono);
  MonomialIdeal init = MonomialIdeal::from_monomials(ring.n, std::move(lead));
  return GroebnerBasis{ring, std::move(reduced), std::move(init)};
}

bool spairs_reduce_to_zero(const GroebnerBasis &G) {
  PrimeField F = G.ring.field();
  for (size_t i = 0; i < G.elements.size(); ++i)
    for (size_t j = i + 1; j < G.elements.size(); ++j) {
      Poly r = normal_form(G.ring, s_poly(F, G.elements[i], G.elements[j]),
                           G.elements);
      if (!r.is_zero()) return false;
    }
  return true;
}

std::vector<Poly> minimal_generators(const IdealPresentation &I) {
  std::vector<Poly> sorted = I.gens;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly &a, const Poly &b) {
                     return a.degree() < b.degree();
                   });
  std::vector<Poly> kept;
  for (const Poly &g : sorted) {
    GroebnerBasis gb = buchberger(IdealPresentation{I.ring, kept});
    if (!normal_form(g, gb).is_zero()) kept.push_back(g);
  }
  return kept;
}

namespace {

// Divides each basis element by its maximal x_n power.
std::vector<Poly> divide_out_last(const Ring &ring,
                                  const std::vector<Poly> &basis) {
  PrimeField F = ring.field();
  int last = ring.n - 1;
  std::vector<Poly> out;
  out.reserve(basis.size());
  for (const Poly &g : basis) {
    int k = 1 << 16;
    for (const Term &t : g.terms()) k = std::min(k, t.mono.exponent(last));
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    std::vector<Term> ts;
    ts.reserve(g.terms().size());
    Monomial xk = Monomial::variable(ring.n, last);
    for (const Term &t : g.terms()) {
      Monomial m = t.mono;
      for (int step = 0; step < k; ++step) m = xk.quotient_into(m);
      ts.push_back(Term{m, t.coef});
    }
    out.push_back(poly_normalize(F, std::move(ts)));
  }
  return out;
}

}  // namespace

bool ideal_equal(const IdealPresentation &a, const IdealPresentation &b) {
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(b);
  if (ga.elements.size() != gb.elements.size()) return false;
  for (size_t i = 0; i < ga.elements.size(); ++i)
    if (!(ga.elements[i] == gb.elements[i])) return false;
  return true;
}

IdealPresentation saturate_wrt_last(const IdealPresentation &I,
                                    bool /*pre_generic*/) {
  GroebnerBasis gb = buchberger(I);
  IdealPresentation J{I.ring, divide_out_last(I.ring, gb.elements)};
  // Stability check (J : x_n) = J, via one more round of the trick.
  GroebnerBasis gj = buchberger(J);
  IdealPresentation J2{I.ring, divide_out_last(I.ring, gj.elements)};
  if (!ideal_equal(J, J2))
    throw GenericityError("saturation unstable: non-generic coordinates");
  return IdealPresentation{I.ring, gj.elements};
}

IdealPresentation saturate(const IdealPresentation &I, std::uint64_t seed) {
  if (I.gens.empty()) return I;
  auto once = [&](std::uint64_t s) {
    CoordinateChange sigma = random_change(I.ring, s);
    IdealPresentation moved = apply_change(I, sigma);
    IdealPresentation sat = saturate_wrt_last(moved, true);
    CoordinateChange back{sigma.inv, sigma.mat};
    IdealPresentation result = apply_change(sat, back);
    return buchberger(result);  // canonical form
  };
  GroebnerBasis a = once(Rng::derive(seed, 0));
  GroebnerBasis b = once(Rng::derive(seed, 1));
  // The reduced basis is canonical, so agreement is plain equality.
  if (a.elements.size() != b.elements.size())
    throw GenericityError("saturation: two seeds disagree");
  for (size_t i = 0; i < a.elements.size(); ++i)
    if (!(a.elements[i] == b.elements[i]))
      throw GenericityError("saturation: two seeds disagree");
  return IdealPresentation{I.ring, a.elements};
}

std::optional<int> nilpotency_index(const IdealPresentation &I) {
  GroebnerBasis gb = buchberger(I);
  HilbertData h = hilbert(gb.initial);
  if (h.dim > 0) return std::nullopt;
  if (h.dim == -1) return 0;  // unit ideal
  for (int s = 0; s < static_cast<int>(h.values.size()); ++s)
    if (h.values[static_cast<size_t>(s)] == 0) return s;
  throw InternalError("artinian quotient with no vanishing degree in range");
}

MonomialIdeal initial_ideal(const IdealPresentation &I) {
  return buchberger(I).initial;
}

std::vector<std::int64_t> hilbert_values_linear_algebra(
    const IdealPresentation &I, int cap) {
  const Ring &ring = I.ring;
  PrimeField F = ring.field();
  std::vector<std::int64_t> values;
  for (int k = 0; k <= cap; ++k) {
    std::vector<Monomial> basis = monomials_of_degree(ring.n, k);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<std::int64_t>> rows;
    auto key = [&](const Monomial &m) {
      std::vector<int> v(static_cast<size_t>(ring.n));
      for (int i = 0; i < ring.n; ++i) v[static_cast<size_t>(i)] = m.exponent(i);
      return v;
    };
    for (size_t b = 0; b < basis.size(); ++b) index[key(basis[b])] = static_cast<int>(b);
    for (const Poly &g : I.gens) {
      int d = g.degree();
      if (d > k) continue;
      for (const Monomial &u : monomials_of_degree(ring.n, k - d)) {
        Poly prod = poly_mul_term(F, g, u, 1);
        std::vector<std::int64_t> row(basis.size(), 0);
        for (const Term &t : prod.terms())
          row[static_cast<size_t>(index.at(key(t.mono)))] = t.coef;
        rows.push_back(std::move(row));
      }
    }
    Mat m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < rows[r].size(); ++c)
        m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    values.push_back(static_cast<std::int64_t>(basis.size()) - rank(F, m));
  }
  return values;
}

}  // namespace degreelab
