#include "sqrtcmp/sepbound.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>

namespace sqrtcmp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log2_of_mpz(const mpz_class& v) {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDN);
    mpfr_log2(t, t, MPFR_RNDN);
    const double out = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return out;
}

// 2^e - sub as a double; +inf once e exceeds the exponent range.
double pow2_minus(unsigned e, double sub) {
    if (e >= 1024) return std::numeric_limits<double>::infinity();
    return std::ldexp(1.0, static_cast<int>(e)) - sub;
}

}  // namespace

ConjMagnitude conjugate_magnitude(std::uint64_t k, const mpz_class& n) {
    if (k < 1 || n < 1) throw Error("conjugate_magnitude requires k >= 1 and n >= 1");
    ConjMagnitude c;
    c.squared = mpz_class(2 * mpz_class(k)) * (2 * mpz_class(k)) * n;
    c.log2 = 0.5 * log2_of_mpz(c.squared);
    return c;
}

BoundReport separation_bounds(std::uint64_t k, const mpz_class& n, unsigned m,
                              GeneratorPolicy policy) {
    const ConjMagnitude c = conjugate_magnitude(k, n);
    BoundReport r;
    r.k = k;
    r.n = n;
    r.m = m;
    r.generator_policy = policy;
    r.conj_magnitude_log2 = c.log2;

    const double proof_exp = pow2_minus(m, 1.0);          // 2^m - 1
    const double stated_exp = pow2_minus(m + 1, 0.0);     // 2^(m+1)
    r.proof_bound_log2 = -proof_exp * c.log2;
    r.stated_bound_log2 = -stated_exp * c.log2;
    if (!std::isfinite(r.proof_bound_log2) || !std::isfinite(r.stated_bound_log2)) {
        r.saturated = true;
        if (!std::isfinite(r.proof_bound_log2)) r.proof_bound_log2 = kNegInf;
        r.stated_bound_log2 = kNegInf;
    }
    // m == 0 gives exponent 0, and -0.0 * x would be -0.0; keep a clean zero
    if (m == 0) r.proof_bound_log2 = 0.0;
    return r;
}

PrimeBound prime_generator_bound(std::uint64_t n, std::uint64_t k) {
    if (n < 2) throw Error("prime_generator_bound requires n >= 2");
    if (k < 1) throw Error("prime_generator_bound requires k >= 1");
    PrimeBound b;
    b.pi_n = prime_count(n);
    const ConjMagnitude c = conjugate_magnitude(k, n);
    const double exponent = b.pi_n >= 1024
                                ? std::numeric_limits<double>::infinity()
                                : pow2_minus(static_cast<unsigned>(b.pi_n), 1.0);
    b.log2_bound = exponent * c.log2;
    if (!std::isfinite(b.log2_bound)) {
        b.saturated = true;
        b.log2_bound = std::numeric_limits<double>::infinity();
    }
    return b;
}

PrecisionCap precision_cap(const BoundReport& report) {
    if (report.saturated) return {true, 0};
    if (report.m == 0) return {false, 64};  // difference is a nonzero integer
    const double need = std::ceil(-report.stated_bound_log2);
    if (!(need < 0x1p48)) return {true, 0};  // cannot allocate such precision anyway
    return {false, static_cast<std::uint64_t>(need < 0 ? 0 : need) + 64};
}

}  // namespace sqrtcmp
