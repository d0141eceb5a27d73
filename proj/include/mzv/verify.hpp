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

#ifndef MZV_VERIFY_HPP
#define MZV_VERIFY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mzv/interp.hpp"

namespace mzv {

/// Outcome of one relation check.  pass <=> residual <= tolerance,
/// where tolerance is the sum of the two error estimates for
/// tail-limited checks and the rounding budget for exact finite
/// identities.  Inputs are pre-rendered (ordered, full precision) so
/// identical checks serialize byte-identically.
struct RelationReport {
    std::string kind; // ohno-integer | ohno-interp | lemma22-exact | harmonic
                      // | lemma21 | mform-oracle
    std::vector<std::pair<std::string, std::string>> inputs;
    Evaluation lhs, rhs;
    Real residual, tolerance;
    bool pass = false;

    explicit RelationReport(Prec p) : lhs(p), rhs(p), residual(p), tolerance(p) {}
};

/// Memoizes truncated integer zeta partial sums across checks
/// ((index, bits, N) -> value).  Composition summands repeat massively
/// across Ohno sums and their duals, and matched truncation keeps N on
/// a shared rung grid, so the hit rate is high.  Thread-safe.
class ZetaValueCache {
  public:
    Real partial_at(const Index& k, long N, Prec bits);

  private:
    struct Entry {
        ZetaSeries series;
        std::map<long, Real> snapshots;
        explicit Entry(const Index& k, Prec bits) : series(k, bits) {}
    };
    std::mutex mu_;
    std::map<std::pair<std::string, Prec>, Entry> entries_;
};

/// Ohno sum: sum over all compositions e of m of zeta(k + e), every
/// summand at matched truncation with a single shared error estimate.
/// Best-effort at the term cap (the estimate stays honest even when a
/// requested epsilon is unreachable).
Evaluation ohno_sum(const Index& k, long m, const PrecisionContext& ctx,
                    ZetaValueCache* cache = nullptr);

/// Ohno's relation at integers: both sides evaluated on a shared
/// truncation ladder; residual |sum(k,m) - sum(dual k,m)| against the
/// summed error estimates.
RelationReport check_ohno_integer(const Index& k, long m, const PrecisionContext& ctx,
                                  ZetaValueCache* cache = nullptr);

/// The interpolated relation at a complex point: both interpolated
/// sums on a shared ladder at matched truncation.
RelationReport check_ohno_interp(const Index& k, const Complex& s, const PrecisionContext& ctx);

/// Finite-truncation collapse at integer s=m: the interpolated sum
/// equals the composition sum of truncated zetas tuple-by-tuple, so the
/// tolerance is a pure rounding budget (no tail term).
RelationReport check_lemma22_exact(const Index& k, long m, long N, const PrecisionContext& ctx);

/// Harmonic relation at complex arguments, matched truncation.
RelationReport check_harmonic(const Complex& s1, const Complex& s2, const PrecisionContext& ctx);

/// One power-sum identity instance over exact rationals.
RelationReport check_lemma21(const std::vector<Real>& bases, int m, const PrecisionContext& ctx);

/// Factorized evaluator against the displacement-coordinate oracle.
RelationReport check_mform(const Index& k, const Complex& s, long N, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

struct SuiteCheck {
    std::string kind;
    std::optional<Index> index;
    long m = 0;
    std::optional<Complex> s;
    std::optional<Complex> s2; // harmonic partner
    long N = 0;                // lemma22-exact / mform-oracle truncation
    std::vector<Real> bases;   // lemma21 instance
};

struct SuiteSpec {
    std::vector<SuiteCheck> checks;
};

/// All ohno-integer checks for admissible indices of weight <= weight_max
/// and shifts m <= m_max, in (weight, enumeration position, m) order.
SuiteSpec ohno_integer_suite(int weight_max, int m_max);

/// ohno-interp checks for one index over a grid of s values (grid order).
SuiteSpec ohno_interp_suite(const Index& k, const std::vector<Complex>& grid);

/// Seeded lemma21 instances: r <= max_depth, m <= max_m, pairwise
/// distinct quarter-integer bases in [-10, 10].
SuiteSpec lemma21_suite(int count, std::uint64_t seed, int max_depth, int max_m, Prec bits);

/// Runs every check in suite order.  Individual checks are independent
/// and may execute on ctx.threads workers; the report list is assembled
/// in suite order regardless of completion order.
std::vector<RelationReport> run_suite(const SuiteSpec& suite, const PrecisionContext& ctx);

inline bool all_pass(const std::vector<RelationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace mzv

#endif
