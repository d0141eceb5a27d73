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

#include "mzv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace mzv {

namespace {

std::string complex_str(const Complex& s) {
    if (s.im().is_zero()) return s.re().decimal();
    return s.re().decimal() + "," + s.im().decimal();
}

void put(RelationReport& rep, std::string key, std::string value) {
    rep.inputs.emplace_back(std::move(key), std::move(value));
}

constexpr long kZetaFirstRung = 16;
constexpr long kInterpFirstRung = 64;

} // namespace

Real ZetaValueCache::partial_at(const Index& k, long N, Prec bits) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(k.str(), bits);
    auto it = entries_.find(key);
    if (it == entries_.end())
        it = entries_.try_emplace(key, k, bits).first;
    Entry& e = it->second;
    auto snap = e.snapshots.find(N);
    if (snap != e.snapshots.end()) return snap->second;
    if (N < e.series.current()) {
        // an earlier caller advanced past N; replay from scratch
        // (bitwise identical: same ascending op sequence)
        ZetaSeries fresh(k, bits);
        fresh.extend(N);
        return e.snapshots.emplace(N, fresh.partial()).first->second;
    }
    e.series.extend(N);
    return e.snapshots.emplace(N, e.series.partial()).first->second;
}

namespace {

struct OhnoSide {
    Index k;
    std::vector<Index> summands;

    OhnoSide(const Index& index, long m) : k(index) {
        if (!index.admissible())
            throw domain_error("index " + index.str() + " is not admissible");
        if (m < 0) throw invalid_input("shift total must be >= 0");
        for (const Composition& e : compositions(index.depth(), static_cast<int>(m)))
            summands.push_back(shifted(index, e));
    }

    Real total_at(long N, Prec bits, ZetaValueCache& cache) const {
        Real sum(bits);
        for (const Index& j : summands) sum += cache.partial_at(j, N, bits);
        return sum;
    }
};

struct SideFit {
    Complex value;
    Real estimate;
    EstimateModel model;
    SideFit(Prec p) : value(p), estimate(p), model(EstimateModel::HalvingTail) {}
};

/// Runs one side of an integer Ohno check along the shared rung grid.
SideFit ohno_ladder_fit(const OhnoSide& side, const std::vector<long>& rungs,
                        const std::vector<Complex>& totals, const PrecisionContext& ctx) {
    std::vector<TailMode> modes =
        integer_tail_modes(side.k, static_cast<int>(rungs.size()), ctx.bits);
    TailFit fit = select_tail_fit(rungs, totals, modes, ctx.bits);
    SideFit out(ctx.bits);
    out.value = fit.value;
    out.estimate = fit.estimate;
    out.model = fit.model;
    return out;
}

Evaluation to_eval(const SideFit& fit, long terms, Prec bits) {
    Evaluation ev(bits);
    ev.value = fit.value;
    ev.error_estimate = fit.estimate;
    ev.terms_used = terms;
    ev.model = fit.model;
    ev.cancellation_ratio.set_si(1);
    return ev;
}

} // namespace

Evaluation ohno_sum(const Index& k, long m, const PrecisionContext& ctx, ZetaValueCache* cache) {
    ZetaValueCache local;
    if (!cache) cache = &local;
    OhnoSide side(k, m);
    const Prec bits = ctx.bits;

    if (ctx.mode == TruncationMode::FixedTerms) {
        const long N = ctx.terms;
        if (N < k.depth()) throw invalid_input("truncation below depth");
        Evaluation ev(bits);
        Real total = side.total_at(N, bits, *cache);
        if (N / 2 >= k.depth()) {
            Real half = side.total_at(N / 2, bits, *cache);
            ev.error_estimate = abs(total - half);
            ev.error_estimate *= 10;
        }
        ev.value.re() = total;
        ev.terms_used = N;
        ev.cancellation_ratio.set_si(1);
        return ev;
    }

    std::vector<long> rungs = ladder_rungs(kZetaFirstRung, ctx.series_cap(k.depth()));
    std::vector<long> seen;
    std::vector<Complex> totals;
    SideFit fit(bits);
    for (long rung : rungs) {
        seen.push_back(rung);
        Complex v(bits);
        v.re() = side.total_at(rung, bits, *cache);
        totals.push_back(v);
        fit = ohno_ladder_fit(side, seen, totals, ctx);
        if (seen.size() >= 2 && fit.estimate.leq_d(ctx.target_eps)) break;
    }
    return to_eval(fit, seen.back(), bits);
}

RelationReport check_ohno_integer(const Index& k, long m, const PrecisionContext& ctx,
                                  ZetaValueCache* cache) {
    ZetaValueCache local;
    if (!cache) cache = &local;
    const Prec bits = ctx.bits;
    Index kd = dual(k);
    OhnoSide left(k, m), right(kd, m);

    RelationReport rep(bits);
    rep.kind = "ohno-integer";

    long terms = 0;
    SideFit fl(bits), fr(bits);
    if (ctx.mode == TruncationMode::FixedTerms) {
        const long N = ctx.terms;
        long depth_max = std::max(k.depth(), kd.depth());
        if (N < depth_max) throw invalid_input("truncation below depth");
        std::vector<long> seen;
        if (N / 2 >= depth_max) seen.push_back(N / 2);
        seen.push_back(N);
        std::vector<Complex> tl, tr;
        for (long rung : seen) {
            Complex a(bits), b(bits);
            a.re() = left.total_at(rung, bits, *cache);
            b.re() = right.total_at(rung, bits, *cache);
            tl.push_back(a);
            tr.push_back(b);
        }
        fl = ohno_ladder_fit(left, seen, tl, ctx);
        fr = ohno_ladder_fit(right, seen, tr, ctx);
        // fixed mode reports the raw truncated value, halving estimate
        fl.value = tl.back();
        fr.value = tr.back();
        fl.model = fr.model = EstimateModel::HalvingTail;
        if (seen.size() < 2) { // degenerate: no halving point, no claim
            fl.estimate.set_zero();
            fr.estimate.set_zero();
        }
        terms = N;
    } else {
        long cap = std::min(ctx.series_cap(k.depth()), ctx.series_cap(kd.depth()));
        std::vector<long> rungs = ladder_rungs(kZetaFirstRung, cap);
        std::vector<long> seen;
        std::vector<Complex> tl, tr;
        for (long rung : rungs) {
            seen.push_back(rung);
            Complex a(bits), b(bits);
            a.re() = left.total_at(rung, bits, *cache);
            b.re() = right.total_at(rung, bits, *cache);
            tl.push_back(a);
            tr.push_back(b);
            fl = ohno_ladder_fit(left, seen, tl, ctx);
            fr = ohno_ladder_fit(right, seen, tr, ctx);
            if (seen.size() >= 2 && fl.estimate.leq_d(ctx.target_eps) &&
                fr.estimate.leq_d(ctx.target_eps))
                break;
        }
        terms = seen.back();
    }

    put(rep, "index", k.str());
    put(rep, "dual", kd.str());
    put(rep, "m", std::to_string(m));
    put(rep, "terms", std::to_string(terms));
    put(rep, "bits", std::to_string(bits));
    rep.lhs = to_eval(fl, terms, bits);
    rep.rhs = to_eval(fr, terms, bits);
    rep.residual = distance(rep.lhs.value, rep.rhs.value);
    rep.tolerance = rep.lhs.error_estimate + rep.rhs.error_estimate;
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

namespace {

Evaluation interp_side_eval(const std::vector<Complex>& partial, const Real& est, long terms,
                            Prec bits) {
    Evaluation ev(bits);
    for (const Complex& p : partial) ev.value += p;
    ev.error_estimate = est;
    ev.terms_used = terms;
    ev.model = EstimateModel::HalvingTail;
    Real peak = abs(ev.value);
    for (const Complex& p : partial) peak = max(peak, abs(p));
    if (!ev.value.is_zero())
        ev.cancellation_ratio = peak / abs(ev.value);
    else
        ev.cancellation_ratio.set_si(1);
    return ev;
}

} // namespace

RelationReport check_ohno_interp(const Index& k, const Complex& s, const PrecisionContext& ctx) {
    const Prec bits = ctx.bits;
    Index kd = dual(k);
    RelationReport rep(bits);
    rep.kind = "ohno-interp";

    auto total_of = [&](const std::vector<Complex>& partial) {
        Complex v(bits);
        for (const Complex& p : partial) v += p;
        return v;
    };

    long terms = 0;
    std::vector<Complex> pl, pr;
    Real el(bits), er(bits);
    if (ctx.mode == TruncationMode::FixedTerms) {
        const long N = ctx.terms;
        pl = interp_pivot_partials(k, s, N, ctx);
        pr = interp_pivot_partials(kd, s, N, ctx);
        long depth_max = std::max(k.depth(), kd.depth());
        if (N / 2 >= depth_max) {
            el = distance(total_of(pl), total_of(interp_pivot_partials(k, s, N / 2, ctx)));
            el *= 10;
            er = distance(total_of(pr), total_of(interp_pivot_partials(kd, s, N / 2, ctx)));
            er *= 10;
        }
        terms = N;
    } else {
        long cap = std::min(ctx.interp_cap(k.depth()), ctx.interp_cap(kd.depth()));
        std::vector<long> rungs = ladder_rungs(kInterpFirstRung, cap);
        Complex prev_l(bits), prev_r(bits);
        bool have_prev = false;
        for (long rung : rungs) {
            pl = interp_pivot_partials(k, s, rung, ctx);
            pr = interp_pivot_partials(kd, s, rung, ctx);
            Complex tl = total_of(pl), tr = total_of(pr);
            terms = rung;
            if (have_prev) {
                el = distance(tl, prev_l);
                el *= 10;
                er = distance(tr, prev_r);
                er *= 10;
                if (el.leq_d(ctx.target_eps) && er.leq_d(ctx.target_eps)) break;
            }
            prev_l = tl;
            prev_r = tr;
            have_prev = true;
        }
    }

    put(rep, "index", k.str());
    put(rep, "dual", kd.str());
    put(rep, "s", complex_str(s));
    put(rep, "terms", std::to_string(terms));
    put(rep, "bits", std::to_string(bits));
    rep.lhs = interp_side_eval(pl, el, terms, bits);
    rep.rhs = interp_side_eval(pr, er, terms, bits);
    rep.residual = distance(rep.lhs.value, rep.rhs.value);
    rep.tolerance = rep.lhs.error_estimate + rep.rhs.error_estimate;
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

RelationReport check_lemma22_exact(const Index& k, long m, long N, const PrecisionContext& ctx) {
    const Prec bits = ctx.bits;
    if (m < 0) throw invalid_input("shift total must be >= 0");
    RelationReport rep(bits);
    rep.kind = "lemma22-exact";

    Complex s(m, bits);
    Complex lhs = interp_truncated(k, s, N, ctx);
    Real rhs(bits);
    for (const Composition& e : compositions(k.depth(), static_cast<int>(m)))
        rhs += zeta_truncated(shifted(k, e), N, ctx);

    put(rep, "index", k.str());
    put(rep, "m", std::to_string(m));
    put(rep, "terms", std::to_string(N));
    put(rep, "bits", std::to_string(bits));
    rep.lhs.value = lhs;
    rep.lhs.terms_used = N;
    rep.rhs.value.re() = rhs;
    rep.rhs.terms_used = N;
    rep.residual = distance(rep.lhs.value, rep.rhs.value);
    rep.tolerance = rounding_budget(bits, abs(lhs));
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

RelationReport check_harmonic(const Complex& s1, const Complex& s2, const PrecisionContext& ctx) {
    const Prec bits = ctx.bits;
    RelationReport rep(bits);
    rep.kind = "harmonic";
    HarmonicResult hr = harmonic_residual(s1, s2, ctx);

    put(rep, "s1", complex_str(s1));
    put(rep, "s2", complex_str(s2));
    put(rep, "terms", std::to_string(hr.terms_used));
    put(rep, "bits", std::to_string(bits));
    rep.lhs.value = hr.lhs_value;
    rep.lhs.error_estimate = hr.lhs_estimate;
    rep.lhs.terms_used = hr.terms_used;
    rep.rhs.value = hr.rhs_value;
    rep.rhs.error_estimate = hr.rhs_estimate;
    rep.rhs.terms_used = hr.terms_used;
    rep.residual = hr.residual;
    rep.tolerance = hr.combined_estimate;
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

RelationReport check_lemma21(const std::vector<Real>& bases, int m, const PrecisionContext& ctx) {
    const Prec bits = ctx.bits;
    RelationReport rep(bits);
    rep.kind = "lemma21";

    Real lhs = lemma21_lhs(bases, m, ctx);
    Real rhs = lemma21_rhs(bases, m, ctx);

    std::string rendered;
    for (size_t i = 0; i < bases.size(); ++i) {
        if (i) rendered += ",";
        rendered += bases[i].decimal();
    }
    put(rep, "a", rendered);
    put(rep, "m", std::to_string(m));
    put(rep, "bits", std::to_string(bits));
    rep.lhs.value.re() = lhs;
    rep.rhs.value.re() = rhs;
    rep.residual = abs(lhs - rhs);
    rep.tolerance = rounding_budget(bits, abs(lhs));
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

RelationReport check_mform(const Index& k, const Complex& s, long N, const PrecisionContext& ctx) {
    const Prec bits = ctx.bits;
    RelationReport rep(bits);
    rep.kind = "mform-oracle";

    Complex lhs = interp_truncated(k, s, N, ctx);
    Complex rhs = interp_mform(k, s, N, ctx);

    put(rep, "index", k.str());
    put(rep, "s", complex_str(s));
    put(rep, "terms", std::to_string(N));
    put(rep, "bits", std::to_string(bits));
    rep.lhs.value = lhs;
    rep.lhs.terms_used = N;
    rep.rhs.value = rhs;
    rep.rhs.terms_used = N;
    rep.residual = distance(lhs, rhs);
    rep.tolerance = rounding_budget(bits, abs(lhs));
    rep.pass = rep.residual <= rep.tolerance;
    return rep;
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

SuiteSpec ohno_integer_suite(int weight_max, int m_max) {
    if (weight_max < 2) throw config_error("weight bound must be >= 2");
    if (m_max < 0) throw config_error("m bound must be >= 0");
    SuiteSpec suite;
    for (int w = 2; w <= weight_max; ++w)
        for (const Index& k : admissible_indices(w))
            for (int m = 0; m <= m_max; ++m) {
                SuiteCheck c;
                c.kind = "ohno-integer";
                c.index = k;
                c.m = m;
                suite.checks.push_back(std::move(c));
            }
    return suite;
}

SuiteSpec ohno_interp_suite(const Index& k, const std::vector<Complex>& grid) {
    SuiteSpec suite;
    for (const Complex& s : grid) {
        SuiteCheck c;
        c.kind = "ohno-interp";
        c.index = k;
        c.s = s;
        suite.checks.push_back(std::move(c));
    }
    return suite;
}

SuiteSpec lemma21_suite(int count, std::uint64_t seed, int max_depth, int max_m, Prec bits) {
    if (count < 0 || max_depth < 1 || max_m < 0) throw config_error("bad lemma21 suite bounds");
    SuiteSpec suite;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_depth));
        int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_m + 1));
        // pairwise-distinct quarter-integers in [-10, 10]
        std::vector<long> nums;
        while (static_cast<int>(nums.size()) < r) {
            long q = static_cast<long>(rng() % 81) - 40;
            bool dup = false;
            for (long seenq : nums) dup = dup || seenq == q;
            if (!dup) nums.push_back(q);
        }
        SuiteCheck c;
        c.kind = "lemma21";
        c.m = m;
        for (long q : nums) {
            Real a(q, bits);
            a /= 4;
            c.bases.push_back(std::move(a));
        }
        suite.checks.push_back(std::move(c));
    }
    return suite;
}

namespace {

RelationReport dispatch(const SuiteCheck& c, const PrecisionContext& ctx, ZetaValueCache& cache) {
    if (c.kind == "ohno-integer") {
        if (!c.index) throw config_error("ohno-integer check needs an index");
        return check_ohno_integer(*c.index, c.m, ctx, &cache);
    }
    if (c.kind == "ohno-interp") {
        if (!c.index || !c.s) throw config_error("ohno-interp check needs an index and s");
        return check_ohno_interp(*c.index, *c.s, ctx);
    }
    if (c.kind == "lemma22-exact") {
        if (!c.index) throw config_error("lemma22-exact check needs an index");
        if (c.N < 1) throw config_error("lemma22-exact check needs a truncation N");
        return check_lemma22_exact(*c.index, c.m, c.N, ctx);
    }
    if (c.kind == "harmonic") {
        if (!c.s || !c.s2) throw config_error("harmonic check needs s1 and s2");
        return check_harmonic(*c.s, *c.s2, ctx);
    }
    if (c.kind == "lemma21") {
        if (c.bases.empty()) throw config_error("lemma21 check needs base values");
        return check_lemma21(c.bases, static_cast<int>(c.m), ctx);
    }
    if (c.kind == "mform-oracle") {
        if (!c.index || !c.s) throw config_error("mform-oracle check needs an index and s");
        if (c.N < 1) throw config_error("mform-oracle check needs a truncation N");
        return check_mform(*c.index, *c.s, c.N, ctx);
    }
    throw config_error("unknown check kind '" + c.kind + "'");
}

} // namespace

std::vector<RelationReport> run_suite(const SuiteSpec& suite, const PrecisionContext& ctx) {
    const size_t n = suite.checks.size();
    std::vector<std::optional<RelationReport>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    ZetaValueCache cache;

    int workers = std::max(1, std::min(ctx.threads, static_cast<int>(n)));
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) slots[i] = dispatch(suite.checks[i], ctx, cache);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    slots[i] = dispatch(suite.checks[i], ctx, cache);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        for (size_t i = 0; i < n; ++i)
            if (errors[i]) std::rethrow_exception(errors[i]);
    }

    std::vector<RelationReport> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(std::move(*slots[i]));
    return out;
}

} // namespace mzv
