/* Copyright 2026 The mzv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef MZV_INTERP_HPP
#define MZV_INTERP_HPP

#include <vector>

#include "mzv/index.hpp"
#include "mzv/precision.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// One pivot term of the interpolated sum: 1-based pivot position, the
/// pivot value n_i, and the partial-fraction weight
/// prod_{j != i} n_j/(n_j - n_i).  Exactly i-1 factors are negative, so
/// the weight carries sign (-1)^{i-1}; for depth 1 it is the empty
/// product 1.
struct WeightedTerm {
    int pivot;
    long value;
    Real weight;
};

/// Exact-rational pivot weight, rounded once at context precision.
/// n must be strictly increasing positive integers, 1 <= pivot <= r.
WeightedTerm weighted_term(const std::vector<long>& n, int pivot, const PrecisionContext& ctx);
Real pf_weight(const std::vector<long>& n, int pivot, const PrecisionContext& ctx);

/// Two routes through the distinct-pole power-sum identity
///   sum over compositions e of a_1^{e_1}...a_r^{e_r}
///     = sum_i a_i^{m+r-1} prod_{j != i} (a_i - a_j)^{-1}.
/// The inputs (binary floats) are taken as exact rationals, each side
/// is evaluated exactly and rounded once at context precision; the two
/// agree to rounding.  Duplicate entries throw invalid_input (the
/// right-hand side is singular).
Real lemma21_lhs(const std::vector<Real>& a, int m, const PrecisionContext& ctx);
Real lemma21_rhs(const std::vector<Real>& a, int m, const PrecisionContext& ctx);

/// Truncated interpolated sum
///   sum_{i=1..r} sum_{0<n_1<...<n_r<=N} prod n_j^{-k_j} * n_i^{-s}
///        * prod_{j != i} n_j/(n_j - n_i)
/// evaluated by factoring the tuple sum per pivot value: for pivot i at
/// value n, the lower tuples contribute a nested sum over x < n with
/// per-level factor x^{1-k_j}/(x - n), the upper tuples one over
/// n < x <= N with the same factor shape, each by the prefix-sum DP.
/// Cost O(r N^2) arithmetic; no tuple enumeration.
/// Requires k admissible, Re(s) > -1 + margin, N >= depth(k).
Complex interp_truncated(const Index& k, const Complex& s, long N, const PrecisionContext& ctx);

/// Per-pivot partial sums of interp_truncated, ascending pivot order;
/// interp_truncated is their (ascending) sum.  For real s the i-th
/// partial carries sign (-1)^{i-1}.
std::vector<Complex> interp_pivot_partials(const Index& k, const Complex& s, long N,
                                           const PrecisionContext& ctx);

/// Brute-force oracle: the same truncated value in displacement
/// coordinates m_j = n_j - n_{j-1} (every tuple enumerated, pivot
/// factor (m_1+...+m_i)^{-(s+1)}, linear-form denominators).  Exactly
/// equal to interp_truncated up to rounding.  Deliberately capability
/// -limited: depth <= 3 and N <= 200.
Complex interp_mform(const Index& k, const Complex& s, long N, const PrecisionContext& ctx);

/// Adaptive evaluation of the interpolated sum with the halving-tail
/// estimate.  cancellation_ratio reports the largest pivot-partial
/// magnitude over the result magnitude (alternating pivot signs can
/// cancel heavily as Re(s) approaches -1).
Evaluation interp_eval(const Index& k, const Complex& s, const PrecisionContext& ctx);

} // namespace mzv

#endif
