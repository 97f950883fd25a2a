#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>

namespace sqrtcmp {

/// Closed interval [lo, hi] with MPFR endpoints at a fixed working
/// precision. Every operation rounds lo toward -inf and hi toward +inf, so
/// an Interval built from exact inputs always encloses the true real value.
class Interval {
  public:
    explicit Interval(mpfr_prec_t precision_bits);   // [0, 0]
    Interval(const Interval&);
    Interval(Interval&&) noexcept;
    Interval& operator=(const Interval&);
    Interval& operator=(Interval&&) noexcept;
    ~Interval();

    static Interval from_integer(const mpz_class& v, mpfr_prec_t precision_bits);
    /// Enclosure of sqrt(v), v >= 0.
    static Interval sqrt_of(const mpz_class& v, mpfr_prec_t precision_bits);

    mpfr_prec_t precision() const { return prec_; }

    Interval& operator+=(const Interval& rhs);
    friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
    Interval& operator*=(const Interval& rhs);
    friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }

    /// Scale by an exact integer (negative c swaps and negates endpoints).
    Interval& scale(const mpz_class& c);

    void negate();

    /// -1, 0, +1 when the interval is entirely negative, contains zero, or
    /// is entirely positive.
    int sign() const;
    bool contains_zero() const { return sign() == 0; }
    bool is_point() const;

    double lo_double() const;   // rounded toward -inf
    double hi_double() const;   // rounded toward +inf

    /// log2(hi - lo), rounded up; -inf for a point interval.
    double log2_width() const;
    /// log2(lo), rounded down; requires lo > 0.
    double log2_lo() const;
    /// log2(hi), rounded up; requires hi > 0.
    double log2_hi() const;

    /// Decimal endpoint strings, round-to-nearest at `digits` significant
    /// digits (reporting only; not used in certified decisions).
    std::string lo_string(int digits = 20) const;
    std::string hi_string(int digits = 20) const;

    bool intersects(const Interval& other) const;
    /// Both endpoints of `inner` lie within [lo, hi].
    bool encloses(const Interval& inner) const;

  private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

}  // namespace sqrtcmp
