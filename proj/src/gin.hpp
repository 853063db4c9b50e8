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

#ifndef DEGREELAB_GIN_HPP
#define DEGREELAB_GIN_HPP

#include "groebner.hpp"

namespace degreelab {

struct GinResult {
  MonomialIdeal gin;
  int trials_used = 0;
  bool borel_certified = false;
  std::uint64_t seed = 0;
};

struct GinOptions {
  int agreement = 3;   // consecutive identical trials required
  int max_trials = 12;
};

// Computes init(sigma_i . I) for independent random sigma_i until
// `agreement` consecutive trials return the same monomial ideal.  The output
// carries the Borel certificate; over F_p the characteristic-0 exchange
// property can in principle fail, so a false certificate is surfaced, never
// assumed away.  Deterministic for a fixed seed.
GinResult gin(const IdealPresentation &I, std::uint64_t seed,
              const GinOptions &opts = {});

struct GinSuiteReport {
  bool sat_commutes = false;      // gin(I^sat) == gin(I)^sat
  bool idempotent = false;        // gin(gin(I)) == gin(I)
  bool hyperplane_matches = false;  // gin(I_h) == gin(I) with x_n dropped
  bool all() const { return sat_commutes && idempotent && hyperplane_matches; }
};

// Cross-checks the gin identities with independent seeds.
GinSuiteReport gin_invariant_suite(const IdealPresentation &I,
                                   std::uint64_t seed,
                                   const GinOptions &opts = {});

// Presents a monomial ideal as polynomial generators.
IdealPresentation to_presentation(const Ring &ring, const MonomialIdeal &J);

// Restriction of I to a hyperplane h (a linear form with a nonzero last
// coefficient): substitutes x_n and reinterprets in n-1 variables.
IdealPresentation restrict_to_hyperplane(const IdealPresentation &I,
                                         const Poly &h);

}  // namespace degreelab

#endif  // DEGREELAB_GIN_HPP
