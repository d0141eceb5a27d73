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

#include "mzv/series.hpp"

#include <string>

namespace mzv {

const Real& LnTable::ln(long n) {
    while (static_cast<long>(tab_.size()) < n) {
        Real x(static_cast<long>(tab_.size()) + 1, bits_);
        tab_.push_back(log(x));
    }
    return tab_[n - 1];
}

ZetaSeries::ZetaSeries(const Index& k, Prec bits)
    : k_(k.parts()), bits_(bits), prefix_(), pw_(bits), t_(bits) {
    prefix_.reserve(k_.size());
    for (size_t j = 0; j < k_.size(); ++j) prefix_.emplace_back(bits);
}

void ZetaSeries::extend(long to_n) {
    const int r = static_cast<int>(k_.size());
    for (long n = n_ + 1; n <= to_n; ++n) {
        const auto un = static_cast<unsigned long>(n);
        // levels descend so prefix_[j-1] still holds the (n-1)-state
        for (int j = r - 1; j >= 0; --j) {
            pw_.assign_ui_pow_ui(un, static_cast<unsigned long>(k_[j]));
            if (j == 0) {
                t_.assign_recip(pw_);
            } else {
                t_ = prefix_[j - 1];
                t_ /= pw_;
            }
            prefix_[j] += t_;
        }
    }
    if (to_n > n_) n_ = to_n;
}

ComplexNestedSeries::ComplexNestedSeries(std::vector<Complex> s, LnTable& lns, Prec bits)
    : s_(std::move(s)), lns_(lns), bits_(bits), z_(bits), t_(bits), arg_(bits) {
    prefix_.reserve(s_.size());
    for (size_t j = 0; j < s_.size(); ++j) prefix_.emplace_back(bits);
}

void ComplexNestedSeries::extend(long to_n) {
    const int r = static_cast<int>(s_.size());
    for (long n = n_ + 1; n <= to_n; ++n) {
        const Real& lnn = lns_.ln(n);
        for (int j = r - 1; j >= 0; --j) {
            // z = n^{-s_j} = exp(-s_j ln n)
            arg_ = s_[j].re();
            arg_ *= lnn;
            arg_.neg();
            z_.re() = arg_;
            arg_ = s_[j].im();
            arg_ *= lnn;
            arg_.neg();
            z_.im() = arg_;
            z_ = cexp(z_);
            if (j == 0) {
                t_ = z_;
            } else {
                t_ = z_ * prefix_[j - 1];
            }
            prefix_[j] += t_;
        }
    }
    if (to_n > n_) n_ = to_n;
}

// ---------------------------------------------------------------------------
// ladder extrapolation
// ---------------------------------------------------------------------------

std::vector<TailMode> integer_tail_modes(const Index& k, int count, Prec bits) {
    std::vector<TailMode> modes;
    modes.reserve(count);
    const int r = k.depth();
    int c = k.last() - 1;
    while (static_cast<int>(modes.size()) < count) {
        for (int b = r - 1; b >= 0 && static_cast<int>(modes.size()) < count; --b)
            modes.push_back(TailMode{Complex(c, bits), b});
        ++c;
    }
    return modes;
}

std::vector<long> ladder_rungs(long first, long cap) {
    std::vector<long> rungs;
    long n = first;
    if (cap < first) cap = first;
    while (n <= cap) {
        rungs.push_back(n);
        if (n > cap / 2) break;
        n *= 2;
    }
    return rungs;
}

namespace {

Real estimate_floor(const Complex& value, Prec bits) {
    Real f = Real::pow2(-(long)(bits - 32), bits);
    Real scale(1, bits);
    scale += abs(value);
    f *= scale;
    return f;
}

/// Brezinski E-algorithm: eliminates the given modes one at a time from
/// the sequence of partial sums.  Returns the most-extrapolated entry
/// built from the newest rungs plus the last correction magnitude.
struct EResult {
    Complex value;
    Real last_step;
    EResult(Prec p) : value(p), last_step(p) {}
};

EResult e_algorithm(const std::vector<long>& rungs, const std::vector<Complex>& sums,
                    const std::vector<TailMode>& modes, Prec work) {
    const int J = static_cast<int>(rungs.size()) - 1; // points 0..J
    const int T = std::min<int>(static_cast<int>(modes.size()), J);

    std::vector<Complex> E;
    E.reserve(J + 1);
    for (int j = 0; j <= J; ++j) {
        Complex v(work);
        v.re() = sums[j].re();
        v.im() = sums[j].im();
        E.push_back(v);
    }
    // g[l][j] = mode_l evaluated at rung j
    std::vector<std::vector<Complex>> g;
    g.reserve(T);
    for (int l = 0; l < T; ++l) {
        std::vector<Complex> col;
        col.reserve(J + 1);
        for (int j = 0; j <= J; ++j) {
            Real lnN = log(Real(rungs[j], work));
            Complex arg(work);
            arg.re() = modes[l].exponent.re();
            arg.im() = modes[l].exponent.im();
            arg.re() *= lnN;
            arg.im() *= lnN;
            arg.re().neg();
            arg.im().neg();
            Complex phi = cexp(arg); // N^{-exponent}
            for (int b = 0; b < modes[l].log_power; ++b) phi *= lnN;
            col.push_back(phi);
        }
        g.push_back(std::move(col));
    }

    // Walk the diagonal, recording per-pass movement (between-pass step
    // plus within-pass spread).  A single quiet pass can lie on a
    // plateau, so the kept entry is the one inside the quietest pair of
    // consecutive passes, and the estimate is that pair's larger move.
    EResult out(work);
    Complex prev_last(work);
    prev_last = E[J];
    out.value = E[J];
    std::vector<Real> steps;
    std::vector<Complex> diag;
    for (int t = 0; t < T; ++t) {
        const int width = J - t; // entries 0..width-1 survive this pass
        for (int j = 0; j < width; ++j) {
            Complex denom = g[t][j + 1] - g[t][j];
            if (denom.is_zero()) continue; // degenerate column; keep entry
            Complex hi = g[t][j + 1] / denom;
            Complex lo = g[t][j] / denom;
            E[j] = hi * E[j] - lo * E[j + 1];
            for (int l = t + 1; l < T; ++l)
                g[l][j] = hi * g[l][j] - lo * g[l][j + 1];
        }
        Real step = distance(E[width - 1], prev_last);
        if (width >= 2) step = max(step, distance(E[width - 1], E[width - 2]));
        steps.push_back(std::move(step));
        diag.push_back(E[width - 1]);
        prev_last = E[width - 1];
    }
    if (steps.size() == 1) {
        out.last_step = steps[0];
        out.value = diag[0];
        return out;
    }
    size_t best = 0;
    Real best_move = max(steps[0], steps[1]);
    for (size_t t = 1; t + 1 < steps.size(); ++t) {
        Real move = max(steps[t], steps[t + 1]);
        if (move < best_move) {
            best_move = move;
            best = t;
        }
    }
    out.last_step = best_move;
    out.value = diag[best + 1];
    return out;
}

} // namespace

TailFit select_tail_fit(const std::vector<long>& rungs, const std::vector<Complex>& sums,
                        const std::vector<TailMode>& modes, Prec bits) {
    TailFit fit(bits);
    const size_t J = rungs.size();
    fit.value = sums.back();
    fit.estimate = estimate_floor(fit.value, bits);
    if (J >= 2) {
        Real delta = distance(sums[J - 1], sums[J - 2]);
        delta *= 10;
        fit.estimate += delta;
    }
    fit.model = EstimateModel::HalvingTail;
    if (!modes.empty() && J >= 3) {
        EResult er = e_algorithm(rungs, sums, modes, bits + 64);
        Complex v(bits);
        v.re() = er.value.re();
        v.im() = er.value.im();
        Real est(bits);
        est = er.last_step;
        est *= 10;
        est += estimate_floor(v, bits);
        if (est < fit.estimate) {
            fit.value = v;
            fit.estimate = est;
            fit.model = EstimateModel::LadderExtrapolation;
        }
    }
    return fit;
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

namespace {

void require_admissible(const Index& k) {
    if (!k.admissible())
        throw domain_error("index " + k.str() + " is not admissible: the series diverges");
}

void require_terms(const Index& k, long N) {
    if (N < k.depth())
        throw invalid_input("truncation N=" + std::to_string(N) + " below depth " +
                            std::to_string(k.depth()) + " of index " + k.str());
}

constexpr long kZetaFirstRung = 16;

} // namespace

Real zeta_truncated(const Index& k, long N, const PrecisionContext& ctx) {
    require_admissible(k);
    require_terms(k, N);
    ZetaSeries s(k, ctx.bits);
    s.extend(N);
    return s.partial();
}

Evaluation zeta(const Index& k, const PrecisionContext& ctx) {
    require_admissible(k);
    Evaluation ev(ctx.bits);
    ev.cancellation_ratio.set_si(1); // ascending positive terms: peak partial = result

    if (ctx.mode == TruncationMode::FixedTerms) {
        const long N = ctx.terms;
        require_terms(k, N);
        ZetaSeries s(k, ctx.bits);
        Real half(ctx.bits);
        bool have_half = N / 2 >= k.depth();
        if (have_half) {
            s.extend(N / 2);
            half = s.partial();
        }
        s.extend(N);
        ev.value.re() = s.partial();
        if (have_half) {
            ev.error_estimate = abs(s.partial() - half);
            ev.error_estimate *= 10;
        }
        ev.terms_used = N;
        ev.model = EstimateModel::HalvingTail;
        return ev;
    }

    const long cap = ctx.series_cap(k.depth());
    std::vector<long> rungs = ladder_rungs(kZetaFirstRung, cap);
    ZetaSeries s(k, ctx.bits);
    std::vector<long> seen;
    std::vector<Complex> sums;
    TailFit fit(ctx.bits);
    for (long rung : rungs) {
        s.extend(rung);
        seen.push_back(rung);
        Complex v(ctx.bits);
        v.re() = s.partial();
        sums.push_back(v);
        std::vector<TailMode> modes =
            integer_tail_modes(k, static_cast<int>(seen.size()), ctx.bits);
        fit = select_tail_fit(seen, sums, modes, ctx.bits);
        if (seen.size() >= 2 && fit.estimate.leq_d(ctx.target_eps)) {
            ev.value = fit.value;
            ev.error_estimate = fit.estimate;
            ev.terms_used = rung;
            ev.model = fit.model;
            return ev;
        }
    }
    throw convergence_error("zeta(" + k.str() + ") did not reach eps=" +
                            std::to_string(ctx.target_eps) + " by N=" +
                            std::to_string(rungs.back()) +
                            "; best estimate " + fit.estimate.decimal());
}

Complex mzf_complex(const std::vector<Complex>& s, long N, const PrecisionContext& ctx) {
    LnTable lns(ctx.bits);
    return mzf_complex(s, N, ctx, lns);
}

Complex mzf_complex(const std::vector<Complex>& s, long N, const PrecisionContext& ctx,
                    LnTable& lns) {
    if (s.empty()) throw invalid_input("mzf requires at least one exponent");
    const int r = static_cast<int>(s.size());
    if (N < r) throw invalid_input("truncation below depth");
    // absolute convergence: Re(s_l + ... + s_r) > r - l + 1 + margin for all l
    std::vector<double> suffix(r + 2, 0.0);
    for (int l = r; l >= 1; --l) suffix[l] = suffix[l + 1] + s[l - 1].re().to_double();
    for (int l = 1; l <= r; ++l) {
        double bound = static_cast<double>(r - l + 1) + ctx.domain_margin;
        if (!(suffix[l] > bound))
            throw domain_error("outside the absolute-convergence domain: Re(s_" +
                               std::to_string(l) + "+...+s_" + std::to_string(r) + ") = " +
                               std::to_string(suffix[l]) + " <= " + std::to_string(bound) +
                               " at l=" + std::to_string(l));
    }
    ComplexNestedSeries series(s, lns, ctx.bits);
    series.extend(N);
    if (!series.partial().is_finite())
        throw domain_error("nested sum overflowed to a non-finite value");
    return series.partial();
}

HarmonicResult harmonic_residual(const Complex& s1, const Complex& s2,
                                 const PrecisionContext& ctx) {
    const double lo = 1.0 + ctx.domain_margin;
    if (!(s1.re().to_double() > lo) || !(s2.re().to_double() > lo))
        throw domain_error("harmonic relation requires Re(s1), Re(s2) > " + std::to_string(lo));

    LnTable lns(ctx.bits);
    Complex s12 = s1 + s2;
    ComplexNestedSeries z1({s1}, lns, ctx.bits);
    ComplexNestedSeries z2({s2}, lns, ctx.bits);
    ComplexNestedSeries zs({s12}, lns, ctx.bits);
    ComplexNestedSeries z12({s1, s2}, lns, ctx.bits);
    ComplexNestedSeries z21({s2, s1}, lns, ctx.bits);

    auto all_extend = [&](long n) {
        z1.extend(n);
        z2.extend(n);
        zs.extend(n);
        z12.extend(n);
        z21.extend(n);
    };

    HarmonicResult out(ctx.bits);
    std::vector<long> checkpoints;
    if (ctx.mode == TruncationMode::FixedTerms) {
        if (ctx.terms < 2) throw invalid_input("need at least 2 terms");
        checkpoints = {ctx.terms / 2 >= 2 ? ctx.terms / 2 : 2, ctx.terms};
    } else {
        checkpoints = ladder_rungs(kZetaFirstRung, ctx.series_cap(2));
    }

    Complex prev_prod(ctx.bits), prev_rhs(ctx.bits);
    bool have_prev = false;
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        all_extend(checkpoints[i]);
        Complex prod = z1.partial() * z2.partial();
        Complex rhs = z12.partial() + z21.partial() + zs.partial();
        out.lhs_value = prod;
        out.rhs_value = rhs;
        out.terms_used = checkpoints[i];
        if (have_prev) {
            out.lhs_estimate = distance(prod, prev_prod);
            out.lhs_estimate *= 10;
            out.rhs_estimate = distance(rhs, prev_rhs);
            out.rhs_estimate *= 10;
            out.combined_estimate = out.lhs_estimate + out.rhs_estimate;
            if (ctx.mode == TruncationMode::TargetEps &&
                out.combined_estimate.leq_d(ctx.target_eps))
                break;
        }
        prev_prod = prod;
        prev_rhs = rhs;
        have_prev = true;
    }
    out.residual = distance(out.lhs_value, out.rhs_value);
    return out;
}

} // namespace mzv
