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

// Acceptance suite: every criterion at its pinned tolerance, one
// PASS/FAIL line each, nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mzv/jsonio.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string serialized; // for the determinism criterion
};

Complex cval(double re, double im, Prec bits) {
    Complex z(bits);
    z.re().set_d(re);
    z.im().set_d(im);
    return z;
}

void serialize_reports(Outcome& o, const std::vector<RelationReport>& reports, Prec bits) {
    for (const auto& r : reports) {
        o.serialized += to_json(r, bits);
        o.serialized += "\n";
        if (!r.pass) {
            o.pass = false;
            if (o.detail.empty())
                o.detail = "first failure: " + r.kind + " " +
                           (r.inputs.empty() ? "" : r.inputs[0].second) + " residual " +
                           r.residual.decimal() + " tolerance " + r.tolerance.decimal();
        }
    }
}

// 1. dual involution, weight preservation, depth complement; all
//    2^{w-2} admissible indices of each weight w <= 12; exact.
Outcome criterion1() {
    Outcome o;
    long indices = 0;
    for (int w = 2; w <= 12; ++w) {
        auto all = admissible_indices(w);
        if (all.size() != (size_t(1) << (w - 2))) {
            o.pass = false;
            o.detail = "enumeration count off at weight " + std::to_string(w);
            return o;
        }
        for (const Index& k : all) {
            ++indices;
            Index kd = dual(k);
            if (!(dual(kd) == k) || kd.weight() != k.weight() ||
                k.depth() + kd.depth() != k.weight()) {
                o.pass = false;
                o.detail = "failed at index " + k.str();
                return o;
            }
        }
    }
    o.detail = std::to_string(indices) + " indices";
    return o;
}

// 2. 500 seeded power-sum instances, r <= 5, m <= 6, distinct rational
//    bases in [-10,10]; |lhs-rhs| <= 2^-112 * max(|lhs|,1) at 128 bits.
Outcome criterion2() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_bits(128);
    SuiteSpec suite = lemma21_suite(500, 20260809, 5, 6, ctx.bits);
    auto reports = run_suite(suite, ctx);
    size_t n = 0;
    for (const auto& r : reports) {
        ++n;
        if (!r.pass) {
            o.pass = false;
            o.detail = "instance " + std::to_string(n) + " residual " + r.residual.decimal();
            return o;
        }
    }
    o.detail = std::to_string(n) + " instances";
    return o;
}

// 3. finite-truncation collapse at integer s: all admissible weight <= 6,
//    m <= 4, N = 200, rounding budget only.
Outcome criterion3() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_bits(128);
    std::vector<RelationReport> reports;
    for (int w = 2; w <= 6; ++w)
        for (const Index& k : admissible_indices(w))
            for (long m = 0; m <= 4; ++m)
                reports.push_back(check_lemma22_exact(k, m, 200, ctx));
    serialize_reports(o, reports, ctx.bits);
    if (o.pass) o.detail = std::to_string(reports.size()) + " identities, rounding budget 2^-112";
    return o;
}

// 4. factorized evaluator vs displacement-coordinate oracle: weight <= 5,
//    depth <= 3, N = 60, s on {-0.5,0,0.5,1} x {0,1,3}i, rounding budget.
Outcome criterion4() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_bits(128);
    const double res[] = {-0.5, 0.0, 0.5, 1.0};
    const double ims[] = {0.0, 1.0, 3.0};
    std::vector<RelationReport> reports;
    for (int w = 2; w <= 5; ++w)
        for (const Index& k : admissible_indices(w)) {
            if (k.depth() > 3) continue;
            for (double re : res)
                for (double im : ims)
                    reports.push_back(check_mform(k, cval(re, im, ctx.bits), 60, ctx));
        }
    serialize_reports(o, reports, ctx.bits);
    if (o.pass) o.detail = std::to_string(reports.size()) + " comparisons";
    return o;
}

// 5. Ohno's relation at integers: all admissible weight <= 7, m <= 3,
//    eps target 1e-12; residual within summed estimates.
Outcome criterion5() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_eps(1e-12, 128);
    SuiteSpec suite = ohno_integer_suite(7, 3);
    auto reports = run_suite(suite, ctx);
    serialize_reports(o, reports, ctx.bits);
    if (o.pass) o.detail = std::to_string(reports.size()) + " checks";
    return o;
}

// 6. the interpolated relation at complex points, eps target 1e-10;
//    residual within summed estimates.
Outcome criterion6() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_eps(1e-10, 128);
    const Index ks[] = {Index{1, 2}, Index{2, 3}, Index{1, 1, 3}, Index{2, 2}};
    const std::pair<double, double> ss[] = {{0.5, 0.0}, {0.0, 1.0}, {-0.5, 2.0}, {1.5, -1.0}};
    std::vector<RelationReport> reports;
    for (const Index& k : ks)
        for (auto [re, im] : ss)
            reports.push_back(check_ohno_interp(k, cval(re, im, ctx.bits), ctx));
    serialize_reports(o, reports, ctx.bits);
    if (o.pass) o.detail = std::to_string(reports.size()) + " checks";
    return o;
}

// 7. closed-form anchors: zeta(2) within 1e-12 of an independently
//    computed pi^2/6, and I_(1,2)(s) within tolerance of zeta(3+s).
Outcome criterion7() {
    Outcome o;
    PrecisionContext eps_ctx = PrecisionContext::with_eps(1e-12, 128);
    Evaluation z2 = zeta(Index{2}, eps_ctx);
    Real pi = Real::pi(256);
    Real anchor = pi * pi;
    anchor /= 6;
    Real diff = abs(z2.value.re() - anchor);
    if (!diff.leq_d(1e-12)) {
        o.pass = false;
        o.detail = "zeta(2) off pi^2/6 by " + diff.decimal();
        return o;
    }

    PrecisionContext ctx = PrecisionContext::with_bits(128);
    const std::pair<double, double> ss[] = {{0.5, 0.0}, {0.0, 1.0}, {-0.5, 2.0}, {1.5, -1.0}};
    for (auto [re, im] : ss) {
        Complex s = cval(re, im, ctx.bits);
        Evaluation lhs = interp_eval(Index{1, 2}, s, ctx);
        // anchor: the shifted single zeta with its own halving estimate
        Complex arg = s;
        arg.re() += Real(3, ctx.bits);
        Complex a1 = mzf_complex({arg}, 32768, ctx);
        Complex a2 = mzf_complex({arg}, 65536, ctx);
        Real a_est = distance(a1, a2);
        a_est *= 10;
        Real resid = distance(lhs.value, a2);
        Real tol = lhs.error_estimate + a_est;
        if (!(resid <= tol)) {
            o.pass = false;
            o.detail = "anchor failed at s = (" + std::to_string(re) + "," + std::to_string(im) +
                       "): residual " + resid.decimal() + " tolerance " + tol.decimal();
            return o;
        }
    }
    o.detail = "zeta(2) delta " + diff.decimal() + "; 4 interpolation anchors";
    return o;
}

// 8. harmonic relation at complex points within summed estimates.
Outcome criterion8() {
    Outcome o;
    PrecisionContext ctx = PrecisionContext::with_eps(1e-8, 128);
    const std::pair<std::pair<double, double>, std::pair<double, double>> pairs[] = {
        {{2.0, 0.0}, {2.0, 0.0}},
        {{1.5, 2.0}, {2.5, -1.0}},
        {{3.1, 0.0}, {2.2, 0.7}},
    };
    std::vector<RelationReport> reports;
    for (const auto& [p, q] : pairs)
        reports.push_back(
            check_harmonic(cval(p.first, p.second, ctx.bits), cval(q.first, q.second, ctx.bits), ctx));
    serialize_reports(o, reports, ctx.bits);
    if (o.pass) {
        Real worst(ctx.bits);
        for (const auto& r : reports) worst = max(worst, r.residual);
        o.detail = "3 pairs, worst residual " + worst.decimal();
    }
    return o;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;
    std::vector<std::string> first_pass(7); // serialized criteria 3..6 keyed by index

    struct Step {
        const char* name;
        Outcome (*fn)();
        int serial_slot; // >= 0: keep serialization for criterion 9
    };
    const Step steps[] = {
        {"criterion-1 dual involution and weight/depth laws", criterion1, -1},
        {"criterion-2 power-sum identity on 500 random instances", criterion2, -1},
        {"criterion-3 exact finite collapse (weight<=6, m<=4, N=200)", criterion3, 3},
        {"criterion-4 displacement-coordinate oracle (weight<=5, N=60)", criterion4, 4},
        {"criterion-5 Ohno relation at integers (weight<=7, m<=3)", criterion5, 5},
        {"criterion-6 interpolated relation at complex points", criterion6, 6},
        {"criterion-7 closed-form anchors", criterion7, -1},
        {"criterion-8 harmonic relation at complex arguments", criterion8, -1},
    };

    for (const Step& step : steps) {
        auto t0 = clock::now();
        Outcome o = step.fn();
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (step.serial_slot >= 0) first_pass[step.serial_slot - 1] = o.serialized;
        std::printf("%s %s — %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", step.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }

    // 9. determinism: rerunning criteria 3-6 serializes byte-identically.
    {
        auto t0 = clock::now();
        bool pass = true;
        std::string which;
        const Step reruns[] = {
            {"criterion-3", criterion3, 3},
            {"criterion-4", criterion4, 4},
            {"criterion-5", criterion5, 5},
            {"criterion-6", criterion6, 6},
        };
        for (const Step& step : reruns) {
            Outcome o = step.fn();
            if (o.serialized != first_pass[step.serial_slot - 1]) {
                pass = false;
                which = step.name;
                break;
            }
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (pass) {
            std::printf("PASS criterion-9 byte-identical reports on rerun of criteria 3-6 (%.1f s)\n",
                        secs);
        } else {
            std::printf("FAIL criterion-9 rerun of %s differed (%.1f s)\n", which.c_str(), secs);
            ++failures;
        }
    }

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
