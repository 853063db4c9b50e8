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

#ifndef DEGREELAB_GROEBNER_HPP
#define DEGREELAB_GROEBNER_HPP

#include <optional>
#include <vector>

#include "monomial_ideal.hpp"
#include "poly.hpp"

namespace degreelab {

struct IdealPresentation {
  Ring ring;
  std::vector<Poly> gens;  // homogeneous, nonzero
};

// Validates homogeneity and drops zero generators.
IdealPresentation make_ideal(const Ring &ring, std::vector<Poly> gens);

IdealPresentation apply_change(const IdealPresentation &I,
                               const CoordinateChange &sigma);

struct GroebnerBasis {
  Ring ring;
  std::vector<Poly> elements;  // reduced basis, monic, sorted by leading term
  MonomialIdeal initial;       // minimal generators of init(I)
};

// Buchberger's algorithm under graded reverse-lex.  Pairs are processed in
// increasing lcm degree, FIFO within a degree; the coprime-leading-term
// criterion prunes.  The returned basis is the reduced one, so it does not
// depend on the order of the input generators.
GroebnerBasis buchberger(const IdealPresentation &I);

// Remainder of f on division by G; no term of the result is divisible by a
// leading monomial of G.  Zero iff f lies in the ideal.
Poly normal_form(const Ring &ring, const Poly &f, const std::vector<Poly> &G);
Poly normal_form(const Poly &f, const GroebnerBasis &G);

// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
bool spairs_reduce_to_zero(const GroebnerBasis &G);

// Minimal homogeneous generators selected degree by degree from `gens`;
// the size of the result is nu(I).
std::vector<Poly> minimal_generators(const IdealPresentation &I);

// Divides each reduced rlex basis element by its full x_n power and verifies
// (J : x_n) = J.  Valid as the saturation I^sat in generic coordinates (set
// `pre_generic` when a random change has been applied; monomial ideals skip
// the change).  Throws GenericityError when the verification fails.
IdealPresentation saturate_wrt_last(const IdealPresentation &I,
                                    bool pre_generic);

// Full saturation of a general ideal: random coordinate change, the rlex
// division trick, change back.  Two independent seeds must agree.
IdealPresentation saturate(const IdealPresentation &I, std::uint64_t seed);

// Least s with every degree-s monomial in I, or nullopt when dim(S/I) > 0.
std::optional<int> nilpotency_index(const IdealPresentation &I);

// init(I) without any coordinate change.
MonomialIdeal initial_ideal(const IdealPresentation &I);

// Hilbert function of S/I by degreewise linear algebra over F_p; the
// independent route used to cross-check the combinatorial recursion.
std::vector<std::int64_t> hilbert_values_linear_algebra(
    const IdealPresentation &I, int cap);

bool ideal_equal(const IdealPresentation &a, const IdealPresentation &b);

}  // namespace degreelab

#endif  // DEGREELAB_GROEBNER_HPP
