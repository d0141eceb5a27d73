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

// mzv — multiple zeta values, Ohno sums, and their complex interpolation.
//
// Exit codes: 0 success / all checks pass, 1 numeric or domain failure,
// 2 usage or configuration error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mzv/interp.hpp"
#include "mzv/jsonio.hpp"
#include "mzv/verify.hpp"

namespace {

struct GlobalFlags {
    long bits = 0; // 0 = unset (env or 128)
    double eps = 0.0;
    long terms = 0;
    long max_terms = 0;
    int threads = 1;
    bool timing = false;
};

long env_default_bits() {
    const char* raw = std::getenv("MZV_BITS");
    if (!raw || !*raw) return 128;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (!end || *end != '\0' || v < 64)
        throw mzv::config_error("MZV_BITS must be an integer >= 64");
    return v;
}

mzv::PrecisionContext make_ctx(const GlobalFlags& g, long default_bits) {
    if (g.eps > 0 && g.terms > 0)
        throw mzv::config_error("--eps and --terms are mutually exclusive");
    mzv::PrecisionContext ctx;
    ctx.bits = g.bits > 0 ? g.bits : default_bits;
    if (g.eps > 0) {
        ctx.mode = mzv::TruncationMode::TargetEps;
        ctx.target_eps = g.eps;
    } else if (g.terms > 0) {
        ctx.mode = mzv::TruncationMode::FixedTerms;
        ctx.terms = g.terms;
    }
    ctx.max_terms = g.max_terms;
    ctx.threads = g.threads;
    ctx.validate();
    return ctx;
}

void echo_truncation(mzv::OutputRecord& rec, const mzv::PrecisionContext& ctx) {
    if (ctx.mode == mzv::TruncationMode::TargetEps) {
        std::ostringstream eps;
        eps << ctx.target_eps;
        rec.inputs.emplace_back("eps", eps.str());
    } else {
        rec.inputs.emplace_back("terms", std::to_string(ctx.terms));
    }
}

std::string complex_echo(const mzv::Complex& s) {
    if (s.im().is_zero()) return s.re().decimal();
    return s.re().decimal() + "," + s.im().decimal();
}

void warn_cancellation(const mzv::Evaluation& ev, const mzv::PrecisionContext& ctx) {
    double ratio = ev.cancellation_ratio.to_double();
    if (ratio > 1 && std::log2(ratio) > static_cast<double>(ctx.bits) / 4.0)
        std::cerr << "warning: cancellation ratio " << ratio
                  << " — pivot partials cancel heavily; consider more bits\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit_record(mzv::OutputRecord& rec, const mzv::PrecisionContext& ctx, const Timer& timer,
                 bool timing) {
    if (timing) {
        rec.elapsed_ms = timer.ms();
        std::cerr << "elapsed_ms: " << *rec.elapsed_ms << "\n";
    }
    std::cout << mzv::to_json(rec, ctx.bits) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta values, Ohno sums, and their complex interpolation"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--bits", g.bits, "mantissa bits (default 128, env MZV_BITS)");
    app.add_option("--eps", g.eps, "target tail estimate (adaptive mode)");
    app.add_option("--terms", g.terms, "fixed truncation term count");
    app.add_option("--max-terms", g.max_terms, "override the adaptive term cap");
    app.add_option("--threads", g.threads, "worker threads for verification suites");
    app.add_flag("--timing", g.timing, "report elapsed time (stderr + record field)");

    std::string index_arg, s_arg, s_grid_arg, suite_arg, out_arg, format_arg = "csv";
    long m_arg = 0;
    int weight_max = 0, m_max = 0;

    CLI::App* cdual = app.add_subcommand("dual", "print the dual index");
    cdual->add_option("index", index_arg, "index as k1,k2,...")->required();
    cdual->fallthrough();

    CLI::App* czeta = app.add_subcommand("zeta", "evaluate a multiple zeta value");
    czeta->add_option("index", index_arg)->required();
    czeta->fallthrough();

    CLI::App* cinterp = app.add_subcommand("interp", "evaluate the interpolated Ohno sum I_k(s)");
    cinterp->add_option("index", index_arg)->required();
    cinterp->add_option("--s", s_arg, "complex point RE or RE,IM")->required();
    cinterp->fallthrough();

    CLI::App* cohno = app.add_subcommand("ohno-sum", "sum of zeta(k+e) over all shifts of total m");
    cohno->add_option("index", index_arg)->required();
    cohno->add_option("--m", m_arg, "total shift (nonnegative)")->required();
    cohno->fallthrough();

    CLI::App* cverify = app.add_subcommand("verify", "run relation checks, one JSON report per line");
    cverify->add_option("--suite", suite_arg, "JSON suite file");
    cverify->add_option("--weight-max", weight_max, "all admissible indices up to this weight");
    cverify->add_option("--m-max", m_max, "shift bound for --weight-max");
    cverify->add_option("--index", index_arg, "single index for --s-grid");
    cverify->add_option("--s-grid", s_grid_arg, "grid re=a:b:step[,im=c:d:step]");
    cverify->fallthrough();

    CLI::App* csweep = app.add_subcommand("sweep", "tabulate I_k(s) over a grid into a file");
    csweep->add_option("index", index_arg)->required();
    csweep->add_option("--s-grid", s_grid_arg)->required();
    csweep->add_option("--out", out_arg, "output path")->required();
    csweep->add_option("--format", format_arg, "csv|json (default csv)");
    csweep->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const long default_bits = env_default_bits();
        const mzv::PrecisionContext ctx = make_ctx(g, default_bits);
        Timer timer;

        if (*cdual) {
            mzv::Index k = mzv::Index::parse(index_arg);
            std::cout << mzv::dual(k).str() << "\n";
            return 0;
        }

        if (*czeta) {
            mzv::Index k = mzv::Index::parse(index_arg);
            mzv::OutputRecord rec(ctx.bits);
            rec.command = "zeta";
            rec.inputs.emplace_back("index", k.str());
            if (k.admissible()) rec.inputs.emplace_back("dual", mzv::dual(k).str());
            echo_truncation(rec, ctx);
            rec.eval = mzv::zeta(k, ctx);
            emit_record(rec, ctx, timer, g.timing);
            return 0;
        }

        if (*cinterp) {
            mzv::Index k = mzv::Index::parse(index_arg);
            mzv::Complex s = mzv::parse_complex(s_arg, ctx.bits);
            mzv::OutputRecord rec(ctx.bits);
            rec.command = "interp";
            rec.inputs.emplace_back("index", k.str());
            if (k.admissible()) rec.inputs.emplace_back("dual", mzv::dual(k).str());
            rec.inputs.emplace_back("s", complex_echo(s));
            echo_truncation(rec, ctx);
            rec.eval = mzv::interp_eval(k, s, ctx);
            warn_cancellation(rec.eval, ctx);
            emit_record(rec, ctx, timer, g.timing);
            return 0;
        }

        if (*cohno) {
            mzv::Index k = mzv::Index::parse(index_arg);
            mzv::OutputRecord rec(ctx.bits);
            rec.command = "ohno-sum";
            rec.inputs.emplace_back("index", k.str());
            if (k.admissible()) rec.inputs.emplace_back("dual", mzv::dual(k).str());
            rec.inputs.emplace_back("m", std::to_string(m_arg));
            echo_truncation(rec, ctx);
            rec.eval = mzv::ohno_sum(k, m_arg, ctx);
            emit_record(rec, ctx, timer, g.timing);
            return 0;
        }

        if (*cverify) {
            int modes = (!suite_arg.empty() ? 1 : 0) + (weight_max > 0 ? 1 : 0) +
                        (!s_grid_arg.empty() ? 1 : 0);
            if (modes != 1)
                throw mzv::config_error(
                    "choose exactly one of --suite, --weight-max, or --index/--s-grid");
            mzv::SuiteSpec suite;
            if (!suite_arg.empty()) {
                suite = mzv::load_suite_file(suite_arg, ctx.bits);
            } else if (weight_max > 0) {
                suite = mzv::ohno_integer_suite(weight_max, m_max);
            } else {
                if (index_arg.empty())
                    throw mzv::config_error("--s-grid requires --index");
                mzv::Index k = mzv::Index::parse(index_arg);
                mzv::GridSpec grid = mzv::parse_grid(s_grid_arg);
                suite = mzv::ohno_interp_suite(k, grid.points(ctx.bits));
            }
            std::vector<mzv::RelationReport> reports = mzv::run_suite(suite, ctx);
            size_t failed = 0;
            for (const auto& rep : reports) {
                if (!rep.pass) ++failed;
                std::cout << mzv::to_json(rep, ctx.bits) << "\n";
            }
            std::cerr << reports.size() << " checks, " << failed << " failed\n";
            if (g.timing) std::cerr << "elapsed_ms: " << timer.ms() << "\n";
            return failed == 0 ? 0 : 1;
        }

        if (*csweep) {
            mzv::Index k = mzv::Index::parse(index_arg);
            mzv::GridSpec grid = mzv::parse_grid(s_grid_arg);
            if (format_arg != "csv" && format_arg != "json")
                throw mzv::config_error("--format must be csv or json");
            std::ofstream out(out_arg);
            if (!out) throw mzv::config_error("cannot open output file '" + out_arg + "'");
            std::vector<mzv::Complex> pts = grid.points(ctx.bits);
            if (format_arg == "csv") {
                out << "re_s,im_s,re_val,im_val,err,N\n";
                for (const mzv::Complex& s : pts) {
                    mzv::Evaluation ev = mzv::interp_eval(k, s, ctx);
                    warn_cancellation(ev, ctx);
                    out << s.re().decimal() << "," << s.im().decimal() << ","
                        << ev.value.re().decimal() << "," << ev.value.im().decimal() << ","
                        << ev.error_estimate.decimal() << "," << ev.terms_used << "\n";
                }
            } else {
                out << "{\"rows\":[";
                bool first = true;
                for (const mzv::Complex& s : pts) {
                    mzv::Evaluation ev = mzv::interp_eval(k, s, ctx);
                    warn_cancellation(ev, ctx);
                    if (!first) out << ",";
                    first = false;
                    out << "{\"re_s\":\"" << s.re().decimal() << "\",\"im_s\":\""
                        << s.im().decimal() << "\",\"re_val\":\"" << ev.value.re().decimal()
                        << "\",\"im_val\":\"" << ev.value.im().decimal() << "\",\"err\":\""
                        << ev.error_estimate.decimal() << "\",\"N\":" << ev.terms_used << "}";
                }
                out << "]}\n";
            }
            if (g.timing) std::cerr << "elapsed_ms: " << timer.ms() << "\n";
            return 0;
        }
        return 2; // unreachable: a subcommand is required
    } catch (const mzv::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mzv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
