#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sqrtcmp/interval.hpp"

using namespace sqrtcmp;

TEST_CASE("zero interval is a point") {
    const Interval z(64);
    CHECK(z.is_point());
    CHECK(z.sign() == 0);
    CHECK(z.contains_zero());
    CHECK(z.log2_width() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("integers are exact when representable") {
    const Interval v = Interval::from_integer(mpz_class(12345), 64);
    CHECK(v.is_point());
    CHECK(v.lo_double() == 12345.0);
    CHECK(v.sign() == 1);
}

TEST_CASE("sqrt enclosures contain the truth and tighten") {
    const Interval s2 = Interval::sqrt_of(2, 64);
    CHECK(s2.lo_double() <= std::sqrt(2.0));
    CHECK(s2.hi_double() >= std::sqrt(2.0));
    CHECK(s2.log2_width() < -50);

    const Interval wide = Interval::sqrt_of(2, 64);
    const Interval tight = Interval::sqrt_of(2, 256);
    CHECK(wide.encloses(tight));
    CHECK(tight.log2_width() < wide.log2_width());

    const Interval s4 = Interval::sqrt_of(4, 64);
    CHECK(s4.is_point());
    CHECK(s4.lo_double() == 2.0);
}

TEST_CASE("arithmetic keeps directed rounding") {
    Interval x = Interval::sqrt_of(2, 64);
    x += Interval::from_integer(1, 64);
    CHECK(x.lo_double() <= 1 + std::sqrt(2.0));
    CHECK(x.hi_double() >= 1 + std::sqrt(2.0));
    CHECK(x.log2_width() < -50);

    // (1 + sqrt 2)(1 - sqrt 2) = -1
    Interval y = Interval::sqrt_of(2, 64);
    y.negate();
    y += Interval::from_integer(1, 64);
    Interval prod = x * y;
    CHECK(prod.lo_double() <= -1.0);
    CHECK(prod.hi_double() >= -1.0);
    CHECK(prod.sign() == -1);
}

TEST_CASE("scaling by negative integers swaps endpoints") {
    Interval x = Interval::sqrt_of(3, 64);
    x.scale(mpz_class(-5));
    CHECK(x.sign() == -1);
    CHECK(x.lo_double() <= -5 * std::sqrt(3.0));
    CHECK(x.hi_double() >= -5 * std::sqrt(3.0));
    x.scale(mpz_class(0));
    CHECK(x.is_point());
    CHECK(x.sign() == 0);
}

TEST_CASE("nested precision enclosures") {
    // sqrt2 + sqrt3 - sqrt10 enclosed at increasing precision, each nested
    auto make = [](mpfr_prec_t bits) {
        Interval v = Interval::sqrt_of(2, bits);
        v += Interval::sqrt_of(3, bits);
        Interval t = Interval::sqrt_of(10, bits);
        t.negate();
        v += t;
        return v;
    };
    const Interval a = make(64), b = make(128), c = make(256);
    CHECK(a.encloses(b));
    CHECK(b.encloses(c));
    CHECK(a.sign() == -1);  // sqrt2 + sqrt3 < sqrt10
}

TEST_CASE("decimal endpoint strings") {
    const Interval s2 = Interval::sqrt_of(2, 128);
    CHECK(s2.lo_string(10).substr(0, 11) == "1.414213562");
    CHECK(Interval(64).lo_string() == "0");
    Interval neg = Interval::from_integer(-3, 64);
    CHECK(neg.lo_string() == "-3");
}

TEST_CASE("log2 endpoints") {
    const Interval s2 = Interval::sqrt_of(2, 128);
    CHECK(s2.log2_lo() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s2.log2_hi() == doctest::Approx(0.5).epsilon(1e-9));
}
