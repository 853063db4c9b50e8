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

#include "monomial_ideal.hpp"

#include <algorithm>

namespace degreelab {

static bool gen_order(const Monomial &a, const Monomial &b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return rlex_less(a, b);
}

MonomialIdeal MonomialIdeal::unit(int nvars) {
  MonomialIdeal J(nvars);
  J.gens_.push_back(Monomial(nvars));
  return J;
}

MonomialIdeal MonomialIdeal::from_monomials(int nvars,
                                            std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), gen_order);
  MonomialIdeal J(nvars);
  for (const Monomial &m : ms) {
    bool redundant = false;
    for (const Monomial &g : J.gens_)
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) J.gens_.push_back(m);
  }
  return J;
}

MonomialIdeal MonomialIdeal::power_of_max_ideal(int nvars, int t) {
  if (t < 0) throw DomainError("negative power of the maximal ideal");
  return from_monomials(nvars, monomials_of_degree(nvars, t));
}

bool MonomialIdeal::contains(const Monomial &m) const {
  for (const Monomial &g : gens_) {
    if (g.degree() > m.degree()) return false;  // gens sorted by degree
    if (g.divides(m)) return true;
  }
  return false;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal &other) const {
  std::vector<Monomial> ms;
  ms.reserve(gens_.size() * other.gens_.size());
  for (const Monomial &a : gens_)
    for (const Monomial &b : other.gens_) ms.push_back(Monomial::lcm(a, b));
  return from_monomials(n_, std::move(ms));
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal &other) const {
  std::vector<Monomial> ms = gens_;
  ms.insert(ms.end(), other.gens_.begin(), other.gens_.end());
  return from_monomials(n_, std::move(ms));
}

MonomialIdeal MonomialIdeal::colon_var(int var) const {
  std::vector<Monomial> ms;
  ms.reserve(gens_.size());
  Monomial x = Monomial::variable(n_, var);
  for (const Monomial &g : gens_)
    ms.push_back(g.exponent(var) > 0 ? x.quotient_into(g) : g);
  return from_monomials(n_, std::move(ms));
}

MonomialIdeal MonomialIdeal::colon_var_power(int var) const {
  std::vector<Monomial> ms;
  ms.reserve(gens_.size());
  for (const Monomial &g : gens_) ms.push_back(g.without_var(var));
  return from_monomials(n_, std::move(ms));
}

MonomialIdeal MonomialIdeal::set_last_var_zero() const {
  std::vector<Monomial> ms;
  for (const Monomial &g : gens_)
    if (g.exponent(n_ - 1) == 0) ms.push_back(g.truncated(n_ - 1));
  return from_monomials(n_ - 1, std::move(ms));
}

std::optional<std::pair<Monomial, int>> borel_witness(const MonomialIdeal &J) {
  for (const Monomial &g : J.gens()) {
    for (int i = 1; i < J.nvars(); ++i) {  // 0-based i, exchange to i-1
      if (g.exponent(i) == 0) continue;
      Monomial moved = g.without_var(i)
                           .times_var(i, g.exponent(i) - 1)
                           .times_var(i - 1, 1);
      if (!J.contains(moved)) return std::make_pair(g, i + 1);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hilbert series

using IntPoly = std::vector<std::int64_t>;  // coefficient list, index = degree

static IntPoly ip_add(const IntPoly &a, const IntPoly &b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

static IntPoly ip_shift(const IntPoly &a, int k) {
  if (a.empty()) return a;
  IntPoly r(a.size() + static_cast<size_t>(k), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
  return r;
}

// Multiplies by (1 - t^d).
static IntPoly ip_mul_one_minus(const IntPoly &a, int d) {
  IntPoly r(a.size() + static_cast<size_t>(d), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + static_cast<size_t>(d)] -= a[i];
  }
  return r;
}

static void ip_trim(IntPoly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

static std::int64_t ip_eval_one(const IntPoly &a) {
  std::int64_t s = 0;
  for (std::int64_t c : a) s = checked_add(s, c);
  return s;
}

static int pick_pivot(const MonomialIdeal &J) {
  std::vector<int> freq(static_cast<size_t>(J.nvars()), 0);
  for (const Monomial &g : J.gens())
    for (int i = 0; i < J.nvars(); ++i)
      if (g.exponent(i) > 0) ++freq[static_cast<size_t>(i)];
  int best = 0;
  for (int i = 1; i < J.nvars(); ++i)
    if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(best)]) best = i;
  return best;
}

static IntPoly hilbert_numerator(const MonomialIdeal &J) {
  if (J.is_unit()) return {};
  if (J.is_zero()) return {1};
  bool coprime = true;
  const auto &gens = J.gens();
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
  if (coprime) {
    IntPoly r{1};
    for (const Monomial &g : gens) r = ip_mul_one_minus(r, g.degree());
    return r;
  }
  int x = pick_pivot(J);
  std::vector<Monomial> away;
  for (const Monomial &g : gens)
    if (g.exponent(x) == 0) away.push_back(g);
  away.push_back(Monomial::variable(J.nvars(), x));
  MonomialIdeal Jx = MonomialIdeal::from_monomials(J.nvars(), std::move(away));
  IntPoly left = hilbert_numerator(Jx);
  IntPoly right = hilbert_numerator(J.colon_var(x));
  return ip_add(left, ip_shift(right, 1));
}

HilbertData hilbert(const MonomialIdeal &J, int cap) {
  int n = J.nvars();
  if (cap < 0) cap = J.max_gen_degree() + n;
  HilbertData h;
  h.cap = cap;
  IntPoly numer = hilbert_numerator(J);
  ip_trim(numer);
  h.numerator_full = numer;

  // Values: expand numer / (1-t)^n as a power series via prefix sums.
  IntPoly series(static_cast<size_t>(cap) + 1, 0);
  for (size_t i = 0; i < numer.size() && i <= static_cast<size_t>(cap); ++i)
    series[i] = numer[i];
  for (int round = 0; round < n; ++round)
    for (int k = 1; k <= cap; ++k)
      series[static_cast<size_t>(k)] =
          checked_add(series[static_cast<size_t>(k)], series[static_cast<size_t>(k) - 1]);
  h.values = series;

  // Cancel (1-t) factors to find dimension and degree.
  IntPoly q = numer;
  int cancelled = 0;
  if (q.empty()) {
    h.dim = -1;  // zero module
    h.degree = 0;
    h.numerator = q;
    return h;
  }
  while (ip_eval_one(q) == 0) {
    IntPoly next(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      acc = checked_add(acc, q[i]);
      next[i] = acc;
    }
    q = next;
    ip_trim(q);
    ++cancelled;
    if (q.empty()) throw InternalError("numerator cancelled to zero");
  }
  h.dim = n - cancelled;
  if (h.dim < 0) throw InternalError("negative dimension from cancellation");
  h.degree = ip_eval_one(q);
  h.numerator = q;
  return h;
}

std::int64_t length_between(const MonomialIdeal &sub,
                            const MonomialIdeal &super) {
  int n = sub.nvars();
  int cap = std::max(sub.max_gen_degree(), super.max_gen_degree());
  std::int64_t count = 0;
  for (int d = 0; d <= cap; ++d) {
    std::int64_t here = 0;
    for (const Monomial &m : monomials_of_degree(n, d)) {
      bool in_super = super.contains(m);
      bool in_sub = sub.contains(m);
      if (in_sub && !in_super)
        throw InternalError("length_between: sub not contained in super");
      if (in_super && !in_sub) ++here;
    }
    if (d == cap && here != 0)
      throw InternalError("length_between: quotient not finite within cap");
    count += here;
  }
  return count;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal &J, int up_to) {
  if (J.is_unit()) return {};
  if (auto w = borel_witness(J))
    throw DomainError("standard monomials need a Borel-fixed ideal");
  int n = J.nvars();
  int guard = J.max_gen_degree();
  int cap = up_to >= 0 ? up_to : guard;

  std::vector<MonomialIdeal> colon;  // [J : x_t^inf] for t = 1..n
  colon.reserve(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) colon.push_back(J.colon_var_power(t));

  std::vector<Monomial> out;
  for (int d = 0; d <= cap; ++d) {
    for (const Monomial &m : monomials_of_degree(n, d)) {
      if (J.contains(m)) continue;
      int t = m.range();
      bool standard = t == 0 || colon[static_cast<size_t>(t - 1)].contains(m);
      if (standard) {
        if (d >= guard && guard > 0)
          throw InternalError("standard monomial beyond the regularity bound");
        out.push_back(m);
      }
    }
  }
  return out;
}

std::int64_t BettiTable::beta_ideal(int i, int j) const {
  auto it = beta.find({i, j});
  return it == beta.end() ? 0 : it->second;
}

std::int64_t BettiTable::beta_quotient(int i, int j) const {
  if (i == 0) return j == 0 ? 1 : 0;
  return beta_ideal(i - 1, j);
}

std::int64_t BettiTable::beta_total(int i) const {
  std::int64_t s = 0;
  for (const auto &kv : beta)
    if (kv.first.first == i) s += kv.second;
  return s;
}

BettiTable ek_betti(const MonomialIdeal &J) {
  if (J.is_unit())
    throw DomainError("Betti table of the zero module is not defined here");
  if (auto w = borel_witness(J))
    throw DomainError("Eliahou-Kervaire needs a Borel-fixed ideal");
  BettiTable t;
  int max_range = 0;
  for (const Monomial &g : J.gens()) {
    int r = g.range();
    max_range = std::max(max_range, r);
    for (int i = 0; i <= r - 1; ++i)
      t.beta[{i, g.degree() + i}] += binomial(r - 1, i);
  }
  t.pd_quotient = J.is_zero() ? 0 : max_range;
  t.depth_quotient = J.nvars() - t.pd_quotient;
  t.reg_quotient = J.is_zero() ? 0 : J.max_gen_degree() - 1;
  return t;
}

bool betti_hilbert_consistency(const MonomialIdeal &J) {
  BettiTable t = ek_betti(J);
  IntPoly alt{1};  // beta_{0,0}(S/J) = 1
  for (const auto &kv : t.beta) {
    int i = kv.first.first + 1;  // quotient homological degree
    int j = kv.first.second;
    if (static_cast<size_t>(j) >= alt.size()) alt.resize(static_cast<size_t>(j) + 1, 0);
    alt[static_cast<size_t>(j)] += (i % 2 == 0 ? kv.second : -kv.second);
  }
  ip_trim(alt);
  HilbertData h = hilbert(J);
  return alt == h.numerator_full;
}

std::vector<Monomial> monomials_upto_degree_lex(int nvars, int r) {
  std::vector<Monomial> all;
  for (int d = 0; d <= r; ++d) {
    std::vector<Monomial> layer = monomials_of_degree(nvars, d);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  std::sort(all.begin(), all.end(), lex_less);
  return all;
}

bool is_re_compact(const std::vector<Monomial> &M, int c, int r) {
  auto member = [&](const Monomial &m) {
    for (const Monomial &x : M)
      if (x == m) return true;
    return false;
  };
  for (const Monomial &m : M) {
    if (m.degree() > r) return false;
    for (int i = 0; i < c; ++i) {
      if (m.exponent(i) == 0) continue;
      Monomial down = Monomial::variable(c, i).quotient_into(m);  // m / x_i
      if (!member(down)) return false;
      for (int j = i + 1; j < c; ++j)
        if (!member(down.times_var(j, 1))) return false;
    }
  }
  return true;
}

std::vector<Monomial> lex_segment_compact(int c, int r, std::int64_t e) {
  if (c < 1 || r < 0 || e < 1) throw DomainError("lex segment needs c >= 1, r >= 0, e >= 1");
  std::vector<Monomial> all = monomials_upto_degree_lex(c, r);
  if (e > static_cast<std::int64_t>(all.size()))
    throw DomainError("e exceeds the number of monomials of degree <= r");
  all.resize(static_cast<size_t>(e));
  if (!is_re_compact(all, c, r))
    throw CheckError("lex segment failed the compactness certificate");
  return all;
}

}  // namespace degreelab
