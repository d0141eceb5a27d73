#include <catch2/catch_amalgamated.hpp>

#include "mzv/complexval.hpp"
#include "oracles.hpp"

using namespace mzv;

TEST_CASE("decimal strings round-trip bit-exactly") {
    for (Prec bits : {Prec(64), Prec(128), Prec(192)}) {
        Real pi = Real::pi(bits);
        CHECK(Real::parse(pi.decimal(), bits) == pi);
        Real third(1, bits);
        third /= 3;
        CHECK(Real::parse(third.decimal(), bits) == third);
        Real tiny = Real::pow2(-200, bits);
        CHECK(Real::parse(tiny.decimal(), bits) == tiny);
        Real neg(-7, bits);
        neg /= 11;
        CHECK(Real::parse(neg.decimal(), bits) == neg);
    }
    Real zero(128);
    CHECK(zero.decimal() == "0");
    CHECK(Real::parse("0", 128) == zero);
    CHECK_THROWS_AS(Real::parse("1..2", 128), config_error);
    CHECK_THROWS_AS(Real::parse("", 128), config_error);
}

TEST_CASE("basic real arithmetic and fma") {
    Prec bits = 128;
    Real a(1, bits);
    a /= 3;
    Real b = a * 3L;
    CHECK(oracles::close_abs(b, Real(1, bits), 126));
    Real acc(2, bits);
    acc.addmul(Real(3, bits), Real(5, bits)); // 2 + 15
    CHECK(acc == Real(17, bits));
    CHECK(Real::pow2(-112, bits) * Real::pow2(112, bits) == Real(1, bits));
}

TEST_CASE("complex arithmetic identities") {
    Prec bits = 128;
    Complex a(bits), b(bits);
    a.re().set_si(1);
    a.im().set_si(2);
    b.re().set_si(3);
    b.im().set_si(-1);
    Complex p = a * b; // (1+2i)(3-i) = 5+5i
    CHECK(p.re() == Real(5, bits));
    CHECK(p.im() == Real(5, bits));

    Complex q = p / b;
    CHECK(oracles::close_abs(q, a, 120));

    CHECK(abs(Complex(Real(3, bits), Real(4, bits))) == Real(5, bits));

    // e^{i pi} = -1
    Complex ipi(bits);
    ipi.im() = Real::pi(bits);
    Complex e = cexp(ipi);
    Complex minus1(-1, bits);
    CHECK(oracles::close_abs(e, minus1, 120));

    Complex cj = conj(a);
    CHECK(cj.im() == -a.im());
}

TEST_CASE("precision is carried per value") {
    Real wide = Real::pi(256);
    Real narrow = Real::pi(64);
    CHECK(wide.prec() == 256);
    CHECK(narrow.prec() == 64);
    CHECK(oracles::close_abs(Real::pi(128), wide, 126));
}
