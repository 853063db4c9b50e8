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

#include "gin.hpp"

namespace degreelab {

GinResult gin(const IdealPresentation &I, std::uint64_t seed,
              const GinOptions &opts) {
  if (I.gens.empty())
    throw DomainError("gin of the zero ideal is not defined");
  GinResult result;
  result.seed = seed;
  std::optional<MonomialIdeal> current;
  int streak = 0;
  for (int trial = 0; trial < opts.max_trials; ++trial) {
    CoordinateChange sigma = random_change(I.ring, Rng::derive(seed, static_cast<std::uint64_t>(trial)));
    MonomialIdeal init = initial_ideal(apply_change(I, sigma));
    if (current && init == *current) {
      ++streak;
    } else {
      current = init;
      streak = 1;
    }
    if (streak >= opts.agreement) {
      result.gin = *current;
      result.trials_used = trial + 1;
      result.borel_certified = is_borel_fixed(result.gin);
      return result;
    }
  }
  throw GenericityError(
      "gin trials did not reach agreement; a larger characteristic may help");
}

IdealPresentation to_presentation(const Ring &ring, const MonomialIdeal &J) {
  std::vector<Poly> gens;
  gens.reserve(J.gens().size());
  for (const Monomial &m : J.gens()) gens.push_back(Poly::from_monomial(m));
  return IdealPresentation{ring, std::move(gens)};
}

IdealPresentation restrict_to_hyperplane(const IdealPresentation &I,
                                         const Poly &h) {
  const Ring &ring = I.ring;
  PrimeField F = ring.field();
  int last = ring.n - 1;
  std::int64_t c_last = 0;
  for (const Term &t : h.terms())
    if (t.mono.exponent(last) == 1 && t.mono.degree() == 1) c_last = t.coef;
  if (h.homogeneous_degree() != 1 || c_last == 0)
    throw DomainError("hyperplane must be linear with a unit last coefficient");

  // x_n := -(1/c_n) * (rest of h), expressed in the small ring.
  Ring small(ring.n - 1, ring.p,
             std::vector<std::string>(ring.names.begin(), ring.names.end() - 1));
  std::vector<Term> subst;
  std::int64_t scale = F.neg(F.inv(c_last));
  for (const Term &t : h.terms()) {
    if (t.mono.exponent(last) == 1) continue;
    int var = t.mono.range() - 1;
    subst.push_back(Term{Monomial::variable(small.n, var), F.mul(scale, t.coef)});
  }
  Poly image = poly_normalize(F, std::move(subst));

  std::vector<Poly> gens;
  for (const Poly &g : I.gens) {
    Poly acc;
    for (const Term &t : g.terms()) {
      int e = t.mono.exponent(last);
      Poly prod = Poly::from_monomial(t.mono.without_var(last).truncated(small.n),
                                      t.coef);
      for (int k = 0; k < e; ++k) prod = poly_mul(F, prod, image);
      acc = poly_add(F, acc, prod);
    }
    if (!acc.is_zero()) gens.push_back(acc);
  }
  return IdealPresentation{small, std::move(gens)};
}

GinSuiteReport gin_invariant_suite(const IdealPresentation &I,
                                   std::uint64_t seed, const GinOptions &opts) {
  GinSuiteReport report;
  GinResult base = gin(I, Rng::derive(seed, 100), opts);

  // (a) gin(I^sat) = gin(I)^sat, with monomial saturation on the right.
  IdealPresentation sat = saturate(I, Rng::derive(seed, 200));
  MonomialIdeal lhs = gin(sat, Rng::derive(seed, 300), opts).gin;
  report.sat_commutes = lhs == base.gin.saturate_last();

  // (b) gin(gin(I)) = gin(I).
  GinResult again =
      gin(to_presentation(I.ring, base.gin), Rng::derive(seed, 400), opts);
  report.idempotent = again.gin == base.gin;

  // (c) gin(I_h) for a random hyperplane equals gin(I) with x_n set to 0.
  if (I.ring.n >= 2) {
    Rng rng(Rng::derive(seed, 500));
    Poly h;
    do {
      h = random_linear_form(I.ring, rng);
    } while ([&] {
      for (const Term &t : h.terms())
        if (t.mono.exponent(I.ring.n - 1) == 1) return false;
      return true;
    }());
    IdealPresentation Ih = restrict_to_hyperplane(I, h);
    MonomialIdeal expected = base.gin.set_last_var_zero();
    if (Ih.gens.empty()) {
      report.hyperplane_matches = expected.is_zero();
    } else {
      GinResult small = gin(Ih, Rng::derive(seed, 600), opts);
      report.hyperplane_matches = small.gin == expected;
    }
  } else {
    report.hyperplane_matches = true;  // no hyperplane to cut in one variable
  }
  return report;
}

}  // namespace degreelab
