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

#ifndef MZV_COMPLEXVAL_HPP
#define MZV_COMPLEXVAL_HPP

#include "mzv/real.hpp"

namespace mzv {

/// Complex number at extended precision: a pair of Reals at the same
/// mantissa precision.  Plain rectangular arithmetic, no branch cuts
/// beyond what exp/log on the components imply.
class Complex {
  public:
    explicit Complex(Prec prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(long re, Prec prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    Prec prec() const { return re_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool is_real() const { return im_.is_zero(); }

    void set_zero() {
        re_.set_zero();
        im_.set_zero();
    }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Real& w) {
        re_ *= w;
        im_ *= w;
        return *this;
    }
    Complex& operator/=(long n) {
        re_ /= n;
        im_ /= n;
        return *this;
    }
    /// this += z*w with real weight w
    void addmul(const Complex& z, const Real& w) {
        re_.addmul(z.re_, w);
        im_.addmul(z.im_, w);
    }

    friend Complex operator+(const Complex& a, const Complex& b) {
        Complex r(a);
        r += b;
        return r;
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        Complex r(a);
        r -= b;
        return r;
    }
    friend Complex operator-(const Complex& a) {
        Complex r(a);
        r.re_.neg();
        r.im_.neg();
        return r;
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        Complex r(a.prec() > b.prec() ? a.prec() : b.prec());
        r.re_ = a.re_ * b.re_;
        Real t = a.im_ * b.im_;
        r.re_ -= t;
        r.im_ = a.re_ * b.im_;
        r.im_.addmul(a.im_, b.re_);
        return r;
    }
    friend Complex operator*(const Complex& a, const Real& w) {
        Complex r(a);
        r *= w;
        return r;
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // a * conj(b) / |b|^2
        Prec p = a.prec() > b.prec() ? a.prec() : b.prec();
        Real n(p);
        n = b.re_ * b.re_;
        n.addmul(b.im_, b.im_);
        Complex r = a * conj(b);
        r.re_ /= n;
        r.im_ /= n;
        return r;
    }

    friend Complex conj(const Complex& a) {
        Complex r(a);
        r.im_.neg();
        return r;
    }
    friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }

    /// e^z = e^re (cos im + i sin im)
    friend Complex cexp(const Complex& z) {
        Complex r(z.prec());
        if (z.im_.is_zero()) {
            r.re_ = exp(z.re_);
            return r;
        }
        Real m = exp(z.re_);
        Real s(z.prec()), c(z.prec());
        sin_cos(s, c, z.im_);
        r.re_ = c * m;
        r.im_ = s * m;
        return r;
    }

  private:
    Real re_, im_;
};

/// |a - b|
inline Real distance(const Complex& a, const Complex& b) { return abs(a - b); }

} // namespace mzv

#endif
