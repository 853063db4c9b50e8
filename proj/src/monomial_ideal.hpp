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

#ifndef DEGREELAB_MONOMIAL_IDEAL_HPP
#define DEGREELAB_MONOMIAL_IDEAL_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace degreelab {

// Monomial ideal held as its unique minimal generating antichain, sorted by
// (degree, rlex).  The unit ideal is generated by 1; the zero ideal has no
// generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : n_(nvars) {}

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(int nvars);
  static MonomialIdeal from_monomials(int nvars, std::vector<Monomial> ms);
  // All monomials of degree t in every variable, i.e. m^t.
  static MonomialIdeal power_of_max_ideal(int nvars, int t);

  int nvars() const { return n_; }
  const std::vector<Monomial> &gens() const { return gens_; }
  std::int64_t nu() const { return static_cast<std::int64_t>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_.front().is_one(); }
  int max_gen_degree() const {
    return gens_.empty() ? 0 : gens_.back().degree();
  }

  bool contains(const Monomial &m) const;

  MonomialIdeal intersect(const MonomialIdeal &other) const;
  MonomialIdeal plus(const MonomialIdeal &other) const;

  // [J : x_i] and [J : x_i^inf]; `var` is 0-based.
  MonomialIdeal colon_var(int var) const;
  MonomialIdeal colon_var_power(int var) const;

  // [J : x_n^inf]; equals the saturation for Borel-fixed ideals.
  MonomialIdeal saturate_last() const { return colon_var_power(n_ - 1); }

  // (J + (x_n)) / (x_n) as an ideal of k[x_1..x_{n-1}].
  MonomialIdeal set_last_var_zero() const;

  bool operator==(const MonomialIdeal &o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }

 private:
  int n_;
  std::vector<Monomial> gens_;
};

// Borel exchange certificate: for every generator m and every i >= 2 with
// deg_{x_i}(m) > 0, (x_{i-1}/x_i) m must lie in the ideal.  Returns the
// violating (generator, 1-based i) when the test fails.
std::optional<std::pair<Monomial, int>> borel_witness(const MonomialIdeal &J);

inline bool is_borel_fixed(const MonomialIdeal &J) {
  return !borel_witness(J).has_value();
}

struct HilbertData {
  std::vector<std::int64_t> values;          // H(S/J; 0..cap)
  std::vector<std::int64_t> numerator;       // Q(t) after full cancellation
  std::vector<std::int64_t> numerator_full;  // over (1-t)^n
  int dim = 0;                               // -1 for the zero module
  std::int64_t degree = 0;                   // Q(1)
  int cap = 0;
};

// Hilbert data of S/J by the pivot recursion
// N(J) = N(J + (x)) + t * N(J : x).  cap < 0 selects max generator degree
// plus the number of variables.
HilbertData hilbert(const MonomialIdeal &J, int cap = -1);

// Number of monomials in `super` but not in `sub` (sub must be contained in
// super and the difference finite; a guard slice catches misuse).
std::int64_t length_between(const MonomialIdeal &sub,
                            const MonomialIdeal &super);

// Monomials m not in J with m in [J : x_t^inf] for t = range(m); the count
// equals bdeg(S/J) for Borel-fixed J.  J must pass the Borel certificate.
// `up_to` overrides the search cap (default: max generator degree).
std::vector<Monomial> standard_monomials(const MonomialIdeal &J,
                                         int up_to = -1);

// Graded Betti numbers of the Borel-fixed ideal J from generator ranges:
// each generator of degree d and range r contributes C(r-1, i) to
// beta_{i, d+i}.  Quotient-level data comes from the degree shift.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> beta;  // of the ideal J
  int pd_quotient = 0;     // = max generator range
  int depth_quotient = 0;  // = n - pd_quotient
  int reg_quotient = 0;    // = max generator degree - 1

  std::int64_t beta_ideal(int i, int j) const;
  std::int64_t beta_quotient(int i, int j) const;  // shift, beta_{0,0} = 1
  std::int64_t beta_total(int i) const;            // ideal-level beta_i
};

BettiTable ek_betti(const MonomialIdeal &J);

// Checks sum_{i,j} (-1)^i beta_{ij}(S/J) t^j against the uncancelled
// Hilbert numerator of S/J.
bool betti_hilbert_consistency(const MonomialIdeal &J);

// All monomials of degree <= r in `nvars` variables, lex-ascending.
std::vector<Monomial> monomials_upto_degree_lex(int nvars, int r);

// The e lexicographically least monomials of degree <= r in c variables,
// certified (r,e)-compact (closed under division and the shift axiom).
std::vector<Monomial> lex_segment_compact(int c, int r, std::int64_t e);

// Compactness predicate used by the certifier and the exhaustive tests.
bool is_re_compact(const std::vector<Monomial> &M, int c, int r);

}  // namespace degreelab

#endif  // DEGREELAB_MONOMIAL_IDEAL_HPP
