#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sqrtcmp/numthy.hpp"

using namespace sqrtcmp;

TEST_CASE("sieve_primes basics") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(0).empty());
    CHECK(sieve_primes(100).size() == 25);  // trial-division count below
    CHECK(sieve_primes(100).size() == oracle::trial_prime_count(100));
}

TEST_CASE("sieve matches trial division counts") {
    for (std::uint64_t limit : {2u, 3u, 4u, 30u, 97u, 541u, 1000u, 7919u})
        CHECK(prime_count(limit) == oracle::trial_prime_count(limit));
}

TEST_CASE("sieve limit guard") {
    CHECK_THROWS_AS(sieve_primes(kSieveHardCap + 1), ResourceError);
}

TEST_CASE("is_prime deterministic spot checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1001));                  // 7 * 11 * 13
    CHECK(is_prime(2147483647ull));               // 2^31 - 1
    CHECK(is_prime(9223372036854775783ull));      // largest prime < 2^63
    CHECK_FALSE(is_prime(3215031751ull));         // strong pseudoprime to 2,3,5,7
    for (std::uint64_t n = 1; n <= 2000; ++n)
        CHECK(is_prime(n) == oracle::trial_is_prime(n));
}

TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());

    const Factorization f12 = factorize(12);
    CHECK(f12.factors == std::vector<PrimePower>{{2, 2}, {3, 1}});

    const Factorization f9999 = factorize(9999);
    CHECK(f9999.factors == std::vector<PrimePower>{{3, 2}, {11, 1}, {101, 1}});
}

TEST_CASE("factorize recomposes and matches trial division") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = rng() % 1'000'000 + 1;
        const Factorization f = factorize(n);
        std::uint64_t prod = 1;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime(p));
            for (unsigned j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
        std::vector<std::pair<std::uint64_t, unsigned>> got;
        for (auto [p, e] : f.factors) got.emplace_back(p, e);
        CHECK(got == oracle::trial_factorize(n));
    }
}

TEST_CASE("factorize large semiprime via rho") {
    // 1000003 * 1000033
    const Factorization f = factorize(1000036000099ull);
    CHECK(f.factors == std::vector<PrimePower>{{1000003, 1}, {1000033, 1}});
}

TEST_CASE("squarefree_decompose examples") {
    CHECK(squarefree_decompose(1) == SquarefreePart{1, 1, 1});
    CHECK(squarefree_decompose(12) == SquarefreePart{12, 2, 3});
    CHECK(squarefree_decompose(720) == SquarefreePart{720, 12, 5});
    CHECK(squarefree_decompose(8) == SquarefreePart{8, 2, 2});
    CHECK(squarefree_decompose(49) == SquarefreePart{49, 7, 1});
}

TEST_CASE("squarefree decomposition over a full range") {
    // identity and direct square-free check against trial division
    for (std::uint64_t n = 1; n <= 20'000; ++n) {
        const SquarefreePart sf = squarefree_decompose(n);
        CHECK(sf.cofactor * sf.cofactor * sf.radicand == n);
        CHECK(oracle::trial_is_squarefree(sf.radicand));
        if (oracle::trial_is_squarefree(n)) CHECK(sf.cofactor == 1);
    }
}

TEST_CASE("squarefree decomposition up to one million") {
    // smallest-prime-factor sieve as the reference decomposition
    constexpr std::uint32_t kLimit = 1'000'000;
    std::vector<std::uint32_t> spf(kLimit + 1, 0);
    for (std::uint32_t p = 2; p <= kLimit; ++p) {
        if (spf[p] != 0) continue;
        for (std::uint64_t q = p; q <= kLimit; q += p)
            if (spf[q] == 0) spf[q] = p;
    }
    std::uint64_t failures = 0;
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
        std::uint64_t rest = n, cof = 1, rad = 1;
        while (rest > 1) {
            const std::uint64_t p = spf[rest];
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            for (unsigned i = 0; i + 1 < e; i += 2) cof *= p;
            if (e & 1) rad *= p;
        }
        const SquarefreePart sf = squarefree_decompose(n);
        if (sf.cofactor != cof || sf.radicand != rad ||
            sf.cofactor * sf.cofactor * sf.radicand != n)
            ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("coprime_base examples") {
    const std::vector<std::uint64_t> v1{6, 10, 15};
    CHECK(coprime_base(v1).values() == std::vector<std::uint64_t>{2, 3, 5});

    const std::vector<std::uint64_t> v2{7};
    CHECK(coprime_base(v2).values() == std::vector<std::uint64_t>{7});

    const std::vector<std::uint64_t> v3{6, 35};
    CHECK(coprime_base(v3).values() == std::vector<std::uint64_t>{6, 35});
}

TEST_CASE("coprime_base rejects non-square-free input") {
    const std::vector<std::uint64_t> v{12};
    CHECK_THROWS_AS(coprime_base(v), NotSquarefreeError);
    const std::vector<std::uint64_t> v2{1};
    CHECK_THROWS_AS(coprime_base(v2), NotSquarefreeError);
}

TEST_CASE("prime_generators examples") {
    const std::vector<std::uint64_t> v1{6, 10, 15};
    CHECK(prime_generators(v1).values() == std::vector<std::uint64_t>{2, 3, 5});
    const std::vector<std::uint64_t> v2{30};
    CHECK(prime_generators(v2).values() == std::vector<std::uint64_t>{2, 3, 5});
    const std::vector<std::uint64_t> v3{77, 91};
    CHECK(prime_generators(v3).values() == std::vector<std::uint64_t>{7, 11, 13});
}

TEST_CASE("subset_decompose examples") {
    const GeneratorSet base({2, 3, 5});
    CHECK(subset_decompose(15, base) == 0b110);  // 3 * 5
    CHECK(subset_decompose(1, base) == 0);
    CHECK(subset_decompose(30, base) == 0b111);
    CHECK_THROWS_AS(subset_decompose(7, base), NotGeneratedError);

    // composite coprime generators work the same way
    const GeneratorSet comp({6, 35});
    CHECK(subset_decompose(210, comp) == 0b11);
    CHECK(subset_decompose(35, comp) == 0b10);
    CHECK_THROWS_AS(subset_decompose(10, comp), NotGeneratedError);  // partial overlap
}

TEST_CASE("coprime base properties on random square-free sets") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<std::uint64_t> vals;
        const int count = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < count; ++i) {
            std::uint64_t v = 2 + rng() % 500;
            while (!oracle::trial_is_squarefree(v)) ++v;
            vals.push_back(v);
        }
        const GeneratorSet base = coprime_base(vals);

        for (unsigned i = 0; i < base.size(); ++i) {
            CHECK(base[i] >= 2);
            CHECK(oracle::trial_is_squarefree(base[i]));
            for (unsigned j = i + 1; j < base.size(); ++j)
                CHECK(std::gcd(base[i], base[j]) == 1);
        }
        // every input is an exact subset product
        for (std::uint64_t v : vals) {
            const std::uint32_t mask = subset_decompose(v, base);
            std::uint64_t prod = 1;
            for (unsigned i = 0; i < base.size(); ++i)
                if (mask & (1u << i)) prod *= base[i];
            CHECK(prod == v);
        }
        // refinement never exceeds the prime base
        CHECK(base.size() <= prime_generators(vals).size());
    }
}

TEST_CASE("choose_generators policies") {
    const std::vector<std::uint64_t> rads{6, 10, 15};

    const GeneratorChoice self = choose_generators(rads, GeneratorPolicy::Self);
    CHECK(self.m == 3);
    CHECK_FALSE(self.have_set);  // 6 and 10 share a factor

    const GeneratorChoice primes = choose_generators(rads, GeneratorPolicy::Primes);
    CHECK(primes.m == 3);
    CHECK(primes.set.values() == std::vector<std::uint64_t>{2, 3, 5});

    const GeneratorChoice cop = choose_generators(rads, GeneratorPolicy::Coprime);
    CHECK(cop.m == 3);
    CHECK(cop.have_set);

    const std::vector<std::uint64_t> coprime_rads{2, 3};
    const GeneratorChoice self2 = choose_generators(coprime_rads, GeneratorPolicy::Self);
    CHECK(self2.have_set);
    CHECK(self2.set.values() == std::vector<std::uint64_t>{2, 3});

    const std::vector<std::uint64_t> empty;
    CHECK(choose_generators(empty, GeneratorPolicy::Coprime).m == 0);
}

TEST_CASE("generator policy names") {
    CHECK(to_string(GeneratorPolicy::Coprime) == "coprime");
    CHECK(to_string(GeneratorPolicy::Self) == "self");
    CHECK(to_string(GeneratorPolicy::Primes) == "primes");
    CHECK(policy_from_string("primes") == GeneratorPolicy::Primes);
    CHECK_THROWS_AS(policy_from_string("other"), Error);
}
