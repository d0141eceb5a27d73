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

#include "mzv/interp.hpp"

#include <gmpxx.h>

#include <string>

namespace mzv {

namespace {

mpq_class rat_of(long num, long den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

mpq_class rat_pow(const mpq_class& q, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    return r;
}

Real round_rat(const mpq_class& q, Prec bits) {
    Real out(bits);
    mpfr_set_q(out.raw(), q.get_mpq_t(), RND);
    return out;
}

void require_interp_domain(const Complex& s, const PrecisionContext& ctx) {
    double lo = -1.0 + ctx.domain_margin;
    if (!(s.re().to_double() > lo))
        throw domain_error("Re(s) = " + std::to_string(s.re().to_double()) +
                           " is not above " + std::to_string(lo) +
                           ": outside the interpolation's convergence half-plane");
}

void require_admissible(const Index& k) {
    if (!k.admissible())
        throw domain_error("index " + k.str() + " is not admissible: the series diverges");
}

} // namespace

WeightedTerm weighted_term(const std::vector<long>& n, int pivot, const PrecisionContext& ctx) {
    const int r = static_cast<int>(n.size());
    if (r < 1) throw invalid_input("pivot weight needs a nonempty tuple");
    for (int j = 1; j < r; ++j)
        if (n[j] <= n[j - 1]) throw invalid_input("tuple must be strictly increasing");
    if (n[0] < 1) throw invalid_input("tuple entries must be positive");
    if (pivot < 1 || pivot > r) throw invalid_input("pivot out of range");

    mpq_class w(1);
    const long ni = n[pivot - 1];
    for (int j = 0; j < r; ++j) {
        if (j == pivot - 1) continue;
        w *= rat_of(n[j], n[j] - ni);
    }
    return WeightedTerm{pivot, ni, round_rat(w, ctx.bits)};
}

Real pf_weight(const std::vector<long>& n, int pivot, const PrecisionContext& ctx) {
    return weighted_term(n, pivot, ctx).weight;
}

namespace {

std::vector<mpq_class> exact_inputs(const std::vector<Real>& a) {
    if (a.empty()) throw invalid_input("need at least one base value");
    std::vector<mpq_class> q;
    q.reserve(a.size());
    for (const Real& x : a) {
        if (!x.is_finite()) throw invalid_input("base values must be finite");
        mpq_class v;
        mpfr_get_q(v.get_mpq_t(), x.raw());
        q.push_back(std::move(v));
    }
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 1; j < q.size(); ++j)
            if (q[i] == q[j])
                throw invalid_input("base values must be pairwise distinct");
    return q;
}

} // namespace

Real lemma21_lhs(const std::vector<Real>& a, int m, const PrecisionContext& ctx) {
    if (m < 0) throw invalid_input("shift total must be >= 0");
    std::vector<mpq_class> q = exact_inputs(a);
    const int r = static_cast<int>(q.size());
    mpq_class sum(0);
    for (const Composition& e : compositions(r, m)) {
        mpq_class term(1);
        for (int i = 0; i < r; ++i)
            if (e.shifts[i]) term *= rat_pow(q[i], static_cast<unsigned long>(e.shifts[i]));
        sum += term;
    }
    return round_rat(sum, ctx.bits);
}

Real lemma21_rhs(const std::vector<Real>& a, int m, const PrecisionContext& ctx) {
    if (m < 0) throw invalid_input("shift total must be >= 0");
    std::vector<mpq_class> q = exact_inputs(a);
    const int r = static_cast<int>(q.size());
    mpq_class sum(0);
    for (int i = 0; i < r; ++i) {
        mpq_class term = rat_pow(q[i], static_cast<unsigned long>(m + r - 1));
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            term /= q[i] - q[j];
        }
        sum += term;
    }
    return round_rat(sum, ctx.bits);
}

// ---------------------------------------------------------------------------
// truncated interpolated sum
// ---------------------------------------------------------------------------

namespace {

/// z[n] = n^{-s} for n = 1..N (z[0] unused).
std::vector<Complex> power_table(const Complex& s, long N, Prec bits) {
    LnTable lns(bits);
    std::vector<Complex> z;
    z.reserve(N + 1);
    z.emplace_back(bits);
    Complex arg(bits);
    for (long n = 1; n <= N; ++n) {
        const Real& lnn = lns.ln(n);
        arg.re() = s.re();
        arg.re() *= lnn;
        arg.re().neg();
        arg.im() = s.im();
        arg.im() *= lnn;
        arg.im().neg();
        z.push_back(cexp(arg));
    }
    return z;
}

} // namespace

std::vector<Complex> interp_pivot_partials(const Index& k, const Complex& s, long N,
                                           const PrecisionContext& ctx) {
    require_admissible(k);
    require_interp_domain(s, ctx);
    const int r = k.depth();
    if (N < r)
        throw invalid_input("truncation N=" + std::to_string(N) + " below depth " +
                            std::to_string(r));
    const Prec bits = ctx.bits;
    const auto& parts = k.parts();

    // x^{1-k_j} per level, shared by the lower and upper nested sums
    // (flat layout: pw[(j-1)*N + (x-1)], levels 1-based)
    std::vector<Real> pw;
    pw.reserve(static_cast<size_t>(r) * N);
    for (int j = 0; j < r; ++j) {
        const unsigned long e = static_cast<unsigned long>(parts[j] - 1);
        for (long x = 1; x <= N; ++x) {
            Real p(bits);
            if (e == 0) {
                p.set_si(1);
            } else {
                p.assign_ui_pow_ui(static_cast<unsigned long>(x), e);
                Real inv(bits);
                inv.assign_recip(p);
                p = std::move(inv);
            }
            pw.push_back(std::move(p));
        }
    }
    auto pwat = [&](int level, long x) -> const Real& {
        return pw[static_cast<size_t>(level - 1) * N + (x - 1)];
    };

    std::vector<Complex> z = power_table(s, N, bits);

    std::vector<Complex> partial;
    partial.reserve(r);
    for (int i = 0; i < r; ++i) partial.emplace_back(bits);

    std::vector<Real> lo, up;
    for (int j = 0; j < r; ++j) {
        lo.emplace_back(bits);
        up.emplace_back(bits);
    }
    Real t(bits), w(bits);

    for (long n = 1; n <= N; ++n) {
        // lower nested sums: lo[j-1] = sum over x_1<...<x_j<n of
        // prod x^{1-k_level}/(x-n), levels 1..r-1
        for (int j = 0; j < r - 1; ++j) lo[j].set_zero();
        for (long x = 1; x < n; ++x) {
            for (int j = r - 1; j >= 1; --j) {
                t.assign_div_si(pwat(j, x), x - n);
                if (j >= 2) t *= lo[j - 2];
                lo[j - 1] += t;
            }
        }
        // upper nested sums: up[j-1] = sum over n<x_j<...<x_r<=N with
        // levels j..r; processed descending in x so each chain extends
        // strictly upward
        for (int j = 0; j < r; ++j) up[j].set_zero();
        for (long x = N; x > n; --x) {
            for (int j = 2; j <= r; ++j) {
                t.assign_div_si(pwat(j, x), x - n);
                if (j < r) t *= up[j]; // up[(j+1)-1] before this x is added
                up[j - 1] += t;
            }
        }
        // combine pivots: term_i = n^{-(k_i+s)} * L_i * U_i
        for (int i = 1; i <= r; ++i) {
            w.assign_div_si(pwat(i, n), n); // n^{1-k_i}/n = n^{-k_i}
            if (i >= 2) w *= lo[i - 2];
            if (i < r) w *= up[i];
            partial[i - 1].addmul(z[n], w);
        }
    }
    for (const Complex& p : partial)
        if (!p.is_finite())
            throw domain_error("pivot partial overflowed to a non-finite value");
    return partial;
}

Complex interp_truncated(const Index& k, const Complex& s, long N, const PrecisionContext& ctx) {
    std::vector<Complex> partial = interp_pivot_partials(k, s, N, ctx);
    Complex total(ctx.bits);
    for (const Complex& p : partial) total += p; // ascending pivot order
    return total;
}

Complex interp_mform(const Index& k, const Complex& s, long N, const PrecisionContext& ctx) {
    require_admissible(k);
    const int r = k.depth();
    if (r > 3)
        throw capability_error("displacement-coordinate oracle is limited to depth <= 3");
    if (N > 200)
        throw capability_error("displacement-coordinate oracle is limited to N <= 200");
    if (N < r) throw invalid_input("truncation below depth");

    const Prec bits = ctx.bits;
    const auto& parts = k.parts();
    std::vector<Complex> z = power_table(s, N, bits); // M^{-s}

    // prefix values M_j = m_1 + ... + m_j sweep all ascending tuples
    Complex total(bits);
    std::vector<long> M(r, 0);
    Real base(bits), t(bits);
    Complex term(bits);

    auto emit = [&]() {
        base.set_si(1);
        for (int j = 0; j < r; ++j) {
            const unsigned long e = static_cast<unsigned long>(parts[j] - 1);
            if (e == 0) continue;
            t.assign_ui_pow_ui(static_cast<unsigned long>(M[j]), e);
            base /= t;
        }
        for (int i = 0; i < r; ++i) {
            long denom = 1;
            for (int j = 0; j < i; ++j) denom *= M[i] - M[j];
            for (int j = i + 1; j < r; ++j) denom *= M[j] - M[i];
            if (i % 2 == 1) denom = -denom; // sign (-1)^{i}, 0-based
            // pivot factor M_i^{-(s+1)} = M_i^{-s} / M_i
            t.assign_div_si(base, denom * M[i]);
            term = z[M[i]];
            term *= t;
            total += term;
        }
    };

    // ascending enumeration of 0 < M_1 < ... < M_r <= N (depth <= 3)
    if (r == 1) {
        for (long a = 1; a <= N; ++a) {
            M[0] = a;
            emit();
        }
    } else if (r == 2) {
        for (long a = 1; a < N; ++a)
            for (long b = a + 1; b <= N; ++b) {
                M[0] = a;
                M[1] = b;
                emit();
            }
    } else {
        for (long a = 1; a + 2 <= N; ++a)
            for (long b = a + 1; b + 1 <= N; ++b)
                for (long c = b + 1; c <= N; ++c) {
                    M[0] = a;
                    M[1] = b;
                    M[2] = c;
                    emit();
                }
    }
    return total;
}

Evaluation interp_eval(const Index& k, const Complex& s, const PrecisionContext& ctx) {
    require_admissible(k);
    require_interp_domain(s, ctx);
    const int r = k.depth();
    const Prec bits = ctx.bits;

    auto finish = [&](const std::vector<Complex>& partial, Real est, long terms) {
        Evaluation ev(bits);
        for (const Complex& p : partial) ev.value += p;
        ev.error_estimate = std::move(est);
        ev.terms_used = terms;
        ev.model = EstimateModel::HalvingTail;
        Real peak = abs(ev.value);
        for (const Complex& p : partial) peak = max(peak, abs(p));
        if (!ev.value.is_zero()) {
            ev.cancellation_ratio = peak / abs(ev.value);
        } else {
            ev.cancellation_ratio.set_si(1);
        }
        return ev;
    };
    auto sum_of = [&](const std::vector<Complex>& partial) {
        Complex v(bits);
        for (const Complex& p : partial) v += p;
        return v;
    };

    if (ctx.mode == TruncationMode::FixedTerms) {
        const long N = ctx.terms;
        if (N < r) throw invalid_input("truncation below depth");
        std::vector<Complex> partial = interp_pivot_partials(k, s, N, ctx);
        Real est(bits);
        if (N / 2 >= r) {
            std::vector<Complex> half = interp_pivot_partials(k, s, N / 2, ctx);
            est = distance(sum_of(partial), sum_of(half));
            est *= 10;
        }
        return finish(partial, std::move(est), N);
    }

    const long cap = ctx.interp_cap(r);
    std::vector<long> rungs = ladder_rungs(64, cap);
    Complex prev(bits);
    bool have_prev = false;
    Real best_est(bits);
    for (long rung : rungs) {
        std::vector<Complex> partial = interp_pivot_partials(k, s, rung, ctx);
        Complex total = sum_of(partial);
        if (have_prev) {
            Real est = distance(total, prev);
            est *= 10;
            best_est = est;
            if (est.leq_d(ctx.target_eps)) return finish(partial, std::move(est), rung);
        }
        prev = total;
        have_prev = true;
    }
    throw convergence_error("interpolated sum for " + k.str() + " did not reach eps=" +
                            std::to_string(ctx.target_eps) + " by N=" +
                            std::to_string(rungs.back()) + "; best estimate " +
                            best_est.decimal());
}

} // namespace mzv
