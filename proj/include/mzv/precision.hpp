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

#ifndef MZV_PRECISION_HPP
#define MZV_PRECISION_HPP

#include <string>

#include "mzv/complexval.hpp"
#include "mzv/errors.hpp"

namespace mzv {

/// How an adaptive evaluation decides when to stop.
enum class TruncationMode {
    FixedTerms, ///< evaluate at exactly `terms` terms, estimate from terms/2
    TargetEps,  ///< grow the term ladder until the estimate drops below eps
};

/// Immutable arithmetic/truncation configuration shared by all
/// evaluations.  Exactly one of {fixed term count, target epsilon}
/// drives adaptivity, selected by `mode`.
struct PrecisionContext {
    Prec bits = 128;          ///< mantissa bits, >= 64
    TruncationMode mode = TruncationMode::FixedTerms;
    long terms = 2048;        ///< fixed truncation (FixedTerms mode)
    double target_eps = 0.0;  ///< tail-estimate target (TargetEps mode)
    long max_terms = 0;       ///< 0 = per-depth default caps
    double domain_margin = 0.05; ///< safety margin above convergence boundaries
    int threads = 1;

    static PrecisionContext with_bits(Prec b) {
        PrecisionContext c;
        c.bits = b;
        c.validate();
        return c;
    }
    static PrecisionContext with_eps(double eps, Prec b = 128) {
        PrecisionContext c;
        c.bits = b;
        c.mode = TruncationMode::TargetEps;
        c.target_eps = eps;
        c.validate();
        return c;
    }
    static PrecisionContext with_terms(long n, Prec b = 128) {
        PrecisionContext c;
        c.bits = b;
        c.terms = n;
        c.validate();
        return c;
    }

    void validate() const {
        if (bits < 64) throw config_error("mantissa bits must be >= 64");
        if (mode == TruncationMode::FixedTerms && terms < 1)
            throw config_error("term count must be positive");
        if (mode == TruncationMode::TargetEps && !(target_eps > 0))
            throw config_error("target epsilon must be positive");
        if (max_terms < 0) throw config_error("term cap must be positive");
        if (threads < 1) throw config_error("thread count must be positive");
    }

    /// Term cap for linear-cost nested sums (zeta ladder).
    long series_cap(int depth) const {
        if (max_terms > 0) return max_terms;
        return depth <= 2 ? 1000000L : 100000L;
    }
    /// Term cap for the quadratic-cost interpolated evaluator.
    long interp_cap(int depth) const {
        if (max_terms > 0) return max_terms;
        return depth <= 1 ? (1L << 20) : 4096L;
    }
};

/// Which heuristic produced an Evaluation's error estimate.  No
/// convergence rates are assumed anywhere, so every tail estimate is
/// an engineering heuristic and is labeled as such.
enum class EstimateModel {
    HalvingTail,        ///< 10 * |S(N) - S(N/2)|
    LadderExtrapolation ///< residual of a Richardson-type ladder fit
};

inline const char* to_string(EstimateModel m) {
    switch (m) {
        case EstimateModel::HalvingTail: return "halving-tail-heuristic";
        case EstimateModel::LadderExtrapolation: return "ladder-extrapolation-heuristic";
    }
    return "?";
}

/// Result of an adaptive evaluation: value, heuristic error estimate,
/// term budget spent, and the cancellation diagnostic
/// (largest partial magnitude / result magnitude; >= 1 for nonzero results).
struct Evaluation {
    Complex value;
    Real error_estimate;
    long terms_used = 0;
    Real cancellation_ratio;
    EstimateModel model = EstimateModel::HalvingTail;

    explicit Evaluation(Prec p)
        : value(p), error_estimate(p), terms_used(1), cancellation_ratio(1, p) {}
};

/// Tolerance for identities that are exact at finite truncation:
/// 2^-(bits-16) * max(|anchor|, 1), a budget for accumulated rounding.
inline Real rounding_budget(Prec bits, const Real& anchor_abs) {
    Real one(1, bits);
    Real scale = anchor_abs < one ? one : anchor_abs;
    return Real::pow2(-(long)(bits - 16), bits) * scale;
}

} // namespace mzv

#endif
