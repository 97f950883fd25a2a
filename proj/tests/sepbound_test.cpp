#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sqrtcmp/sepbound.hpp"

using namespace sqrtcmp;

TEST_CASE("conjugate magnitude") {
    const ConjMagnitude a = conjugate_magnitude(1, 1);
    CHECK(a.squared == 4);  // (2*1)^2 * 1, i.e. the value 2
    CHECK(a.log2 == doctest::Approx(1.0).epsilon(1e-12));

    const ConjMagnitude b = conjugate_magnitude(1, 10);
    CHECK(b.squared == 40);
    CHECK(b.log2 == doctest::Approx(2.6609640474436813).epsilon(1e-12));

    const ConjMagnitude c = conjugate_magnitude(2, 100);
    CHECK(c.squared == 1600);  // 40^2
    CHECK(c.log2 == doctest::Approx(std::log2(40.0)).epsilon(1e-12));
}

TEST_CASE("separation bounds carry both exponent variants") {
    const BoundReport r = separation_bounds(1, 10, 2, GeneratorPolicy::Coprime);
    CHECK(r.proof_bound_log2 == doctest::Approx(-7.982892142331043).epsilon(1e-9));
    CHECK(r.stated_bound_log2 == doctest::Approx(-21.287712379549447).epsilon(1e-9));
    CHECK_FALSE(r.saturated);

    // invariants tie the three log fields together
    CHECK(r.proof_bound_log2 == doctest::Approx(-3 * r.conj_magnitude_log2));
    CHECK(r.stated_bound_log2 == doctest::Approx(-8 * r.conj_magnitude_log2));
    CHECK(r.stated_bound_log2 <= r.proof_bound_log2);
}

TEST_CASE("m = 0 yields the trivial proof bound") {
    const BoundReport r = separation_bounds(3, 17, 0, GeneratorPolicy::Self);
    CHECK(r.proof_bound_log2 == 0.0);
    CHECK(r.stated_bound_log2 == doctest::Approx(-2 * r.conj_magnitude_log2));
    CHECK(r.stated_bound_log2 <= r.proof_bound_log2);
}

TEST_CASE("bounds are monotone in k, n, m") {
    double prev = 1;
    for (unsigned m : {0u, 1u, 2u, 3u, 5u, 8u}) {
        const BoundReport r = separation_bounds(2, 50, m, GeneratorPolicy::Coprime);
        if (prev <= 0) {
            CHECK(r.proof_bound_log2 <= prev);
        }
        prev = r.proof_bound_log2;
        CHECK(r.stated_bound_log2 <= r.proof_bound_log2);
    }
    for (std::uint64_t k = 1; k < 6; ++k) {
        const BoundReport a = separation_bounds(k, 50, 3, GeneratorPolicy::Coprime);
        const BoundReport b = separation_bounds(k + 1, 50, 3, GeneratorPolicy::Coprime);
        CHECK(b.proof_bound_log2 <= a.proof_bound_log2);
        CHECK(b.stated_bound_log2 <= a.stated_bound_log2);
    }
    for (std::uint64_t n = 2; n < 40; n += 7) {
        const BoundReport a = separation_bounds(2, n, 3, GeneratorPolicy::Coprime);
        const BoundReport b = separation_bounds(2, n + 1, 3, GeneratorPolicy::Coprime);
        CHECK(b.proof_bound_log2 <= a.proof_bound_log2);
    }
}

TEST_CASE("saturation for huge generator counts") {
    const BoundReport r = separation_bounds(1, 2, 1100, GeneratorPolicy::Primes);
    CHECK(r.saturated);
    CHECK(r.stated_bound_log2 == -std::numeric_limits<double>::infinity());
    CHECK(precision_cap(r).unbounded);
}

TEST_CASE("prime generator bound") {
    const PrimeBound b10 = prime_generator_bound(10, 1);
    CHECK(b10.pi_n == 4);
    CHECK(b10.log2_bound ==
          doctest::Approx(15 * 2.6609640474436813).epsilon(1e-9));

    const PrimeBound b2 = prime_generator_bound(2, 1);
    CHECK(b2.pi_n == 1);
    CHECK(b2.log2_bound == doctest::Approx(1.5).epsilon(1e-12));

    // pi(30) = 10 exactly; bound follows the (2^pi - 1) formula
    const PrimeBound b30 = prime_generator_bound(30, 3);
    CHECK(b30.pi_n == oracle::trial_prime_count(30));
    CHECK(b30.pi_n == 10);
    CHECK(b30.log2_bound ==
          doctest::Approx(1023 * 5.038407798525416).epsilon(1e-9));
}

TEST_CASE("prime counts match trial division up to one million") {
    CHECK(prime_count(1'000'000) == oracle::trial_prime_count(1'000'000));
}

TEST_CASE("precision caps") {
    CHECK(precision_cap(separation_bounds(1, 10, 2, GeneratorPolicy::Coprime)).bits == 86);
    CHECK(precision_cap(separation_bounds(1, 4, 1, GeneratorPolicy::Coprime)).bits == 72);
    const PrecisionCap zero_m = precision_cap(separation_bounds(1, 100, 0, GeneratorPolicy::Coprime));
    CHECK_FALSE(zero_m.unbounded);
    CHECK(zero_m.bits == 64);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(conjugate_magnitude(0, 5), Error);
    CHECK_THROWS_AS(conjugate_magnitude(1, 0), Error);
    CHECK_THROWS_AS(prime_generator_bound(1, 1), Error);
}
