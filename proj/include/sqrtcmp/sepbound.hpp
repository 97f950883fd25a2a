#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "sqrtcmp/numthy.hpp"

namespace sqrtcmp {

/// 2k*sqrt(n), the ceiling on the magnitude of any Galois conjugate of a
/// difference of two k-term square-root sums with c_i^2 a_i <= n. Kept as
/// the exact integer (2k)^2 * n under the root plus its log2.
struct ConjMagnitude {
    mpz_class squared;  // (2k)^2 * n
    double log2;        // log2(2k*sqrt(n)), correctly rounded at 64 bits
};

ConjMagnitude conjugate_magnitude(std::uint64_t k, const mpz_class& n);

/// Separation-bound data for a k-term-per-side difference with term values
/// bounded by n over an m-generator field. Two exponent variants are
/// carried: the norm-product argument supports (2k sqrt(n))^-(2^m - 1)
/// ("proof"), while the coarser advertised form is (2k sqrt(n))^-(2^(m+1))
/// ("stated", always weaker). Bounds live in log2 space; `saturated` marks
/// exponents too large for that.
struct BoundReport {
    std::uint64_t k = 1;
    mpz_class n = 1;
    unsigned m = 0;
    double conj_magnitude_log2 = 0.0;
    double proof_bound_log2 = 0.0;   // -(2^m - 1) * conj_magnitude_log2
    double stated_bound_log2 = 0.0;  // -2^(m+1)   * conj_magnitude_log2
    GeneratorPolicy generator_policy = GeneratorPolicy::Coprime;
    bool saturated = false;
};

BoundReport separation_bounds(std::uint64_t k, const mpz_class& n, unsigned m,
                              GeneratorPolicy policy);

/// The bound specialization that generates every radicand <= n by the
/// primes <= n: exact pi(n) from a sieve, and the resulting log2 exponent
/// (2^pi(n) - 1) * log2(2k sqrt(n)) for a caller-supplied k.
struct PrimeBound {
    std::uint64_t pi_n = 0;
    double log2_bound = 0.0;
    bool saturated = false;
};

PrimeBound prime_generator_bound(std::uint64_t n, std::uint64_t k);

/// Working precision at which interval evaluation must separate unequal
/// sums: ceil(-stated_bound_log2) plus 64 guard bits. m == 0 means the
/// difference is a nonzero rational integer (absolute value >= 1), so the
/// guard alone suffices. A saturated report yields an unbounded cap and the
/// caller must rely on syntactic equality for termination.
struct PrecisionCap {
    bool unbounded = false;
    std::uint64_t bits = 0;
};

PrecisionCap precision_cap(const BoundReport& report);

}  // namespace sqrtcmp
