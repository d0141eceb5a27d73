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

#ifndef MZV_SERIES_HPP
#define MZV_SERIES_HPP

#include <vector>

#include "mzv/index.hpp"
#include "mzv/precision.hpp"

namespace mzv {

/// Per-evaluation cache of ln n (the dominant cost for complex
/// exponents: n^{-s} = exp(-s ln n)).  Not thread-shared; each
/// evaluation owns or borrows one.
class LnTable {
  public:
    explicit LnTable(Prec bits) : bits_(bits) {}
    const Real& ln(long n);
    Prec bits() const { return bits_; }

  private:
    Prec bits_;
    std::vector<Real> tab_; // tab_[i] = ln(i+1)
};

/// Incremental evaluator of the truncated nested sum
///   S(N) = sum over 1 <= n_1 < ... < n_r <= N of prod n_i^{-k_i}
/// by ascending prefix-sum dynamic programming, O(r) arithmetic per
/// appended n.  Summation ascends in n at every nesting level.
class ZetaSeries {
  public:
    ZetaSeries(const Index& k, Prec bits);
    void extend(long to_n);
    long current() const { return n_; }
    const Real& partial() const { return prefix_.back(); }
    Prec bits() const { return bits_; }

  private:
    std::vector<int> k_;
    Prec bits_;
    long n_ = 0;
    std::vector<Real> prefix_; // prefix_[j] = nested sum over depth j+1 up to n_
    Real pw_, t_;
};

/// Same recursion with complex exponents; n^{-s} = exp(-s ln n).
class ComplexNestedSeries {
  public:
    ComplexNestedSeries(std::vector<Complex> s, LnTable& lns, Prec bits);
    void extend(long to_n);
    long current() const { return n_; }
    const Complex& partial() const { return prefix_.back(); }

  private:
    std::vector<Complex> s_;
    LnTable& lns_;
    Prec bits_;
    long n_ = 0;
    std::vector<Complex> prefix_;
    Complex z_, t_;
    Real arg_;
};

// ---------------------------------------------------------------------------
// Tail-mode extrapolation over a doubling ladder of partial sums.
//
// A truncated Dirichlet-type sum approaches its limit along an asymptotic
// scale N^{-c} (ln N)^b with exponents known from the index (c >= last
// part - 1, b < depth).  Richardson-style elimination of those modes
// across a geometric ladder gives far better values than the raw partial
// sums; the reported estimate stays a heuristic (no proven rates).
// ---------------------------------------------------------------------------

/// One basis function N^{-exponent} (ln N)^{log_power}.
struct TailMode {
    Complex exponent;
    int log_power;
};

/// Dominance-ordered tail modes for an integer admissible index.
std::vector<TailMode> integer_tail_modes(const Index& k, int count, Prec bits);

/// Doubling rungs first, 2*first, ..., capped (at least one rung).
std::vector<long> ladder_rungs(long first, long cap);

struct TailFit {
    Complex value;
    Real estimate;
    EstimateModel model;
    TailFit(Prec p) : value(p), estimate(p), model(EstimateModel::HalvingTail) {}
};

/// Picks between the raw last partial sum (halving estimate) and the
/// ladder extrapolation (when modes are provided and enough rungs
/// exist), whichever carries the smaller heuristic estimate.
TailFit select_tail_fit(const std::vector<long>& rungs, const std::vector<Complex>& sums,
                        const std::vector<TailMode>& modes, Prec bits);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Truncated multiple zeta value at integer exponents.
/// Requires k admissible and N >= depth(k).
Real zeta_truncated(const Index& k, long N, const PrecisionContext& ctx);

/// Adaptive multiple zeta value.  FixedTerms mode evaluates at
/// ctx.terms with the halving estimate; TargetEps mode grows a doubling
/// ladder (with tail-mode extrapolation) until the estimate reaches
/// target_eps, and throws convergence_error if the cap is hit first.
Evaluation zeta(const Index& k, const PrecisionContext& ctx);

/// Truncated MZF at complex arguments inside the absolute-convergence
/// domain Re(s_l + ... + s_r) > r - l + 1 + margin for every l.
/// Violations throw domain_error naming the failing l.
Complex mzf_complex(const std::vector<Complex>& s, long N, const PrecisionContext& ctx);
Complex mzf_complex(const std::vector<Complex>& s, long N, const PrecisionContext& ctx,
                    LnTable& lns);

struct HarmonicResult {
    Real residual;
    Real combined_estimate; ///< lhs_estimate + rhs_estimate
    long terms_used;
    Complex lhs_value;  ///< zeta(s1) zeta(s2)
    Complex rhs_value;  ///< zeta(s1,s2) + zeta(s2,s1) + zeta(s1+s2)
    Real lhs_estimate;
    Real rhs_estimate;
    HarmonicResult(Prec p)
        : residual(p), combined_estimate(p), terms_used(0), lhs_value(p), rhs_value(p),
          lhs_estimate(p), rhs_estimate(p) {}
};

/// |zeta(s1)zeta(s2) - zeta(s1,s2) - zeta(s2,s1) - zeta(s1+s2)| with
/// every component at matched truncation (the identity is exact at
/// finite matched N, so the residual measures rounding).
/// Requires Re(s1), Re(s2) > 1 + margin.
HarmonicResult harmonic_residual(const Complex& s1, const Complex& s2,
                                 const PrecisionContext& ctx);

} // namespace mzv

#endif
