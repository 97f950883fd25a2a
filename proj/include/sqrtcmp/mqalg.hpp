#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "sqrtcmp/interval.hpp"
#include "sqrtcmp/numthy.hpp"

namespace sqrtcmp {

/// A Galois automorphism of the multiquadratic field, identified by the
/// subset of generators whose square root it negates.
struct SignVector {
    std::uint32_t flips = 0;
};

/// Element of Q(sqrt(h_1), ..., sqrt(h_m)) for a pairwise-coprime
/// square-free generator set {h_i}, stored as 2^m exact integer
/// coefficients over the basis { prod_{i in S} sqrt(h_i) : S subset }.
/// Coefficient slots are indexed by the subset bitmask. Immutable value
/// type; all arithmetic is exact.
class MqElement {
  public:
    /// The zero element.
    explicit MqElement(GeneratorSet gen);

    /// The basis element for subset mask S (mask 0 is the constant 1).
    static MqElement basis(GeneratorSet gen, std::uint32_t mask);
    static MqElement constant(GeneratorSet gen, mpz_class value);

    const GeneratorSet& generators() const { return gen_; }
    unsigned rank() const { return gen_.size(); }          // m
    std::size_t dimension() const { return coeffs_.size(); }  // 2^m

    const mpz_class& coeff(std::uint32_t mask) const { return coeffs_[mask]; }
    void set_coeff(std::uint32_t mask, mpz_class value);
    bool is_zero() const;

    /// prod_{i in S} h_i, the square of the basis element for S.
    mpz_class basis_square(std::uint32_t mask) const;

    MqElement& operator+=(const MqElement& rhs);
    friend MqElement operator+(MqElement lhs, const MqElement& rhs) { return lhs += rhs; }
    MqElement operator-() const;
    friend MqElement operator-(MqElement lhs, const MqElement& rhs) { return lhs += -rhs; }

    /// Exact product. Basis elements combine as
    ///   B_S * B_T = (prod_{i in S&T} h_i) * B_{S^T}.
    friend MqElement operator*(const MqElement& lhs, const MqElement& rhs);

    /// Image under the sign-flip automorphism: the coefficient of B_S picks
    /// up (-1)^popcount(flips & S).
    MqElement conjugated(SignVector s) const;

    friend bool operator==(const MqElement&, const MqElement&) = default;

  private:
    GeneratorSet gen_;
    std::vector<mpz_class> coeffs_;
};

/// Product of all 2^m conjugates, folded in ascending sign-vector order.
/// The result is a rational integer: every non-constant coordinate of the
/// conjugate product must vanish (InvariantViolationError otherwise), and
/// the constant coordinate is returned. norm(0) == 0.
mpz_class norm(const MqElement& x);

/// Rigorous enclosure of the real value, every square root and every sum
/// evaluated with directed rounding at the given precision.
Interval eval(const MqElement& x, mpfr_prec_t precision_bits);

}  // namespace sqrtcmp
