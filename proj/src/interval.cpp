#include "sqrtcmp/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqrtcmp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string mpfr_to_decimal(mpfr_srcptr x, int digits) {
    if (mpfr_zero_p(x)) return "0";
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits),
                             x, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(mant.begin());
    }
    // strip trailing zeros of the mantissa, keep at least one digit
    const auto last = mant.find_last_not_of('0');
    mant.erase(std::min(mant.size(), last + 1));
    std::string out;
    if (exp10 <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
    } else if (static_cast<std::size_t>(exp10) >= mant.size()) {
        out = mant + std::string(static_cast<std::size_t>(exp10) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<std::size_t>(exp10)) + "." +
              mant.substr(static_cast<std::size_t>(exp10));
    }
    return neg ? "-" + out : out;
}

}  // namespace

Interval::Interval(mpfr_prec_t precision_bits) : prec_(precision_bits) {
    if (precision_bits < MPFR_PREC_MIN)
        throw std::invalid_argument("interval precision too small");
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_integer(const mpz_class& v, mpfr_prec_t precision_bits) {
    Interval r(precision_bits);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::sqrt_of(const mpz_class& v, mpfr_prec_t precision_bits) {
    if (v < 0) throw std::domain_error("sqrt_of requires a nonnegative argument");
    Interval r(precision_bits);
    // set_z then sqrt, each step rounded in the enclosing direction;
    // sqrt is monotone so the directions survive composition
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(r.hi_, r.hi_, MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& rhs) {
    mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
    mpfr_t cand, best_lo, best_hi;
    mpfr_init2(cand, prec_);
    mpfr_init2(best_lo, prec_);
    mpfr_init2(best_hi, prec_);
    bool first = true;
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(cand, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand, best_lo) < 0) mpfr_set(best_lo, cand, MPFR_RNDD);
            mpfr_mul(cand, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand, best_hi) > 0) mpfr_set(best_hi, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(lo_, best_lo, MPFR_RNDD);
    mpfr_set(hi_, best_hi, MPFR_RNDU);
    mpfr_clear(cand);
    mpfr_clear(best_lo);
    mpfr_clear(best_hi);
    return *this;
}

Interval& Interval::scale(const mpz_class& c) {
    if (c >= 0) {
        mpfr_mul_z(lo_, lo_, c.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi_, hi_, c.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_mul_z(t, hi_, c.get_mpz_t(), MPFR_RNDD);   // new lo from old hi
        mpfr_mul_z(hi_, lo_, c.get_mpz_t(), MPFR_RNDU); // new hi from old lo
        mpfr_set(lo_, t, MPFR_RNDD);
        mpfr_clear(t);
    }
    return *this;
}

void Interval::negate() {
    mpfr_swap(lo_, hi_);
    mpfr_neg(lo_, lo_, MPFR_RNDD);
    mpfr_neg(hi_, hi_, MPFR_RNDU);
}

int Interval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool Interval::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::log2_width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out;
    if (mpfr_zero_p(w)) {
        out = kNegInf;
    } else {
        mpfr_log2(w, w, MPFR_RNDU);
        out = mpfr_get_d(w, MPFR_RNDU);
    }
    mpfr_clear(w);
    return out;
}

double Interval::log2_lo() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log2_lo requires lo > 0");
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_log2(t, lo_, MPFR_RNDD);
    const double out = mpfr_get_d(t, MPFR_RNDD);
    mpfr_clear(t);
    return out;
}

double Interval::log2_hi() const {
    if (mpfr_sgn(hi_) <= 0) throw std::domain_error("log2_hi requires hi > 0");
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_log2(t, hi_, MPFR_RNDU);
    const double out = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return out;
}

std::string Interval::lo_string(int digits) const { return mpfr_to_decimal(lo_, digits); }
std::string Interval::hi_string(int digits) const { return mpfr_to_decimal(hi_, digits); }

bool Interval::intersects(const Interval& other) const {
    return mpfr_cmp(hi_, other.lo_) >= 0 && mpfr_cmp(other.hi_, lo_) >= 0;
}

bool Interval::encloses(const Interval& inner) const {
    return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(inner.hi_, hi_) <= 0;
}

}  // namespace sqrtcmp
