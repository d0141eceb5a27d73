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

#ifndef MZV_REAL_HPP
#define MZV_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv {

using Prec = mpfr_prec_t;

/// All arithmetic rounds to nearest; results are deterministic for a
/// fixed precision and operation order.
inline constexpr mpfr_rnd_t RND = MPFR_RNDN;

/// Extended-precision real number backed by MPFR.
///
/// A Real carries its own mantissa precision, fixed at construction.
/// Assignment rounds into the target's precision; binary operators
/// produce a result at the wider of the two operand precisions.
class Real {
  public:
    explicit Real(Prec prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(long value, Prec prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, RND);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, RND);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, RND);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    Prec prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // -- assignment ------------------------------------------------------
    void set_si(long n) { mpfr_set_si(v_, n, RND); }
    void set_ui(unsigned long n) { mpfr_set_ui(v_, n, RND); }
    void set_zero() { mpfr_set_zero(v_, 1); }
    void set_d(double d) { mpfr_set_d(v_, d, RND); }

    /// 2^e, exact.
    static Real pow2(long e, Prec prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, RND);
        return r;
    }
    static Real pi(Prec prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, RND);
        return r;
    }

    /// Parses a decimal string (scientific notation allowed).
    static Real parse(const std::string& text, Prec prec) {
        Real r(prec);
        const char* s = text.c_str();
        char* end = nullptr;
        int bad = mpfr_strtofr(r.v_, s, &end, 10, RND);
        (void)bad;
        if (end == s || *end != '\0')
            throw config_error("not a decimal number: '" + text + "'");
        return r;
    }

    /// Shortest decimal string that reparses to the same value at the
    /// same precision.  Deterministic; used for all serialized numbers.
    std::string decimal() const {
        if (mpfr_zero_p(v_)) return "0";
        if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
        mpfr_exp_t e = 0;
        char* digits = mpfr_get_str(nullptr, &e, 10, 0, v_, RND);
        std::string d(digits);
        mpfr_free_str(digits);
        std::string sign;
        if (d[0] == '-') {
            sign = "-";
            d.erase(0, 1);
        }
        // strip trailing zeros (keep at least one digit)
        size_t last = d.find_last_not_of('0');
        d.erase(last + 1);
        std::string out = sign + d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
        return out;
    }

    // -- in-place arithmetic (hot paths) ---------------------------------
    Real& operator+=(const Real& o) {
        mpfr_add(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator-=(const Real& o) {
        mpfr_sub(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator*=(const Real& o) {
        mpfr_mul(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator/=(const Real& o) {
        mpfr_div(v_, v_, o.v_, RND);
        return *this;
    }
    Real& operator*=(long n) {
        mpfr_mul_si(v_, v_, n, RND);
        return *this;
    }
    Real& operator/=(long n) {
        mpfr_div_si(v_, v_, n, RND);
        return *this;
    }
    void neg() { mpfr_neg(v_, v_, RND); }
    /// this += a*b, single rounding
    void addmul(const Real& a, const Real& b) { mpfr_fma(v_, a.v_, b.v_, v_, RND); }
    /// this = a/n
    void assign_div_si(const Real& a, long n) { mpfr_div_si(v_, a.v_, n, RND); }
    /// this = a*b
    void assign_mul(const Real& a, const Real& b) { mpfr_mul(v_, a.v_, b.v_, RND); }
    /// this = n^e (n, e machine integers; correctly rounded)
    void assign_ui_pow_ui(unsigned long n, unsigned long e) { mpfr_ui_pow_ui(v_, n, e, RND); }
    /// this = 1/a
    void assign_recip(const Real& a) { mpfr_ui_div(v_, 1, a.v_, RND); }

    // -- queries ----------------------------------------------------------
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, RND); }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int cmpabs(const Real& a, const Real& b) { return mpfr_cmpabs(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    bool less_d(double d) const { return mpfr_cmp_d(v_, d) < 0; }
    bool leq_d(double d) const { return mpfr_cmp_d(v_, d) <= 0; }

    // -- value-returning operators (cold paths) ---------------------------
    friend Real operator+(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_add(r.v_, a.v_, b.v_, RND);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, RND);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, RND);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_div(r.v_, a.v_, b.v_, RND);
        return r;
    }
    friend Real operator*(const Real& a, long n) {
        Real r(a);
        r *= n;
        return r;
    }
    friend Real operator/(const Real& a, long n) {
        Real r(a);
        r /= n;
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r(a);
        r.neg();
        return r;
    }

    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, RND);
        return r;
    }
    friend Real sqrt(const Real& a) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, RND);
        return r;
    }
    friend Real exp(const Real& a) {
        Real r(a.prec());
        mpfr_exp(r.v_, a.v_, RND);
        return r;
    }
    friend Real log(const Real& a) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, RND);
        return r;
    }
    friend Real hypot(const Real& a, const Real& b) {
        Real r(wider(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, RND);
        return r;
    }
    friend Real pow_ui(const Real& a, unsigned long e) {
        Real r(a.prec());
        mpfr_pow_ui(r.v_, a.v_, e, RND);
        return r;
    }
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
    friend void sin_cos(Real& s, Real& c, const Real& a) { mpfr_sin_cos(s.raw(), c.raw(), a.v_, RND); }

  private:
    static Prec wider(const Real& a, const Real& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }
    mpfr_t v_;
};

} // namespace mzv

#endif
