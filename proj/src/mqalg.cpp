#include "sqrtcmp/mqalg.hpp"

#include <bit>

namespace sqrtcmp {

namespace {

std::vector<mpz_class> subset_products(const GeneratorSet& gen) {
    const std::size_t dim = std::size_t{1} << gen.size();
    std::vector<mpz_class> prod(dim);
    prod[0] = 1;
    for (std::uint32_t mask = 1; mask < dim; ++mask) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
        prod[mask] = prod[mask & (mask - 1)] * gen[low];
    }
    return prod;
}

void require_same_field(const MqElement& a, const MqElement& b) {
    if (a.generators() != b.generators())
        throw GeneratorMismatchError(
            "elements belong to different multiquadratic fields");
}

}  // namespace

MqElement::MqElement(GeneratorSet gen)
    : gen_(std::move(gen)), coeffs_(std::size_t{1} << gen_.size()) {}

MqElement MqElement::basis(GeneratorSet gen, std::uint32_t mask) {
    MqElement x(std::move(gen));
    if (mask >= x.dimension())
        throw Error("basis subset mask out of range for this generator set");
    x.coeffs_[mask] = 1;
    return x;
}

MqElement MqElement::constant(GeneratorSet gen, mpz_class value) {
    MqElement x(std::move(gen));
    x.coeffs_[0] = std::move(value);
    return x;
}

void MqElement::set_coeff(std::uint32_t mask, mpz_class value) {
    if (mask >= dimension())
        throw Error("coefficient subset mask out of range for this generator set");
    coeffs_[mask] = std::move(value);
}

bool MqElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

mpz_class MqElement::basis_square(std::uint32_t mask) const {
    mpz_class prod = 1;
    for (unsigned i = 0; i < gen_.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) prod *= gen_[i];
    return prod;
}

MqElement& MqElement::operator+=(const MqElement& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += rhs.coeffs_[s];
    return *this;
}

MqElement MqElement::operator-() const {
    MqElement out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

MqElement operator*(const MqElement& lhs, const MqElement& rhs) {
    require_same_field(lhs, rhs);
    const auto& gen = lhs.generators();
    const std::uint32_t dim = static_cast<std::uint32_t>(lhs.dimension());
    const std::vector<mpz_class> squares = subset_products(gen);
    MqElement out{gen};
    mpz_class term;
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (lhs.coeff(s) == 0) continue;
        for (std::uint32_t t = 0; t < dim; ++t) {
            if (rhs.coeff(t) == 0) continue;
            // B_s * B_t = (prod of shared generators) * B_(s xor t)
            term = lhs.coeff(s) * rhs.coeff(t) * squares[s & t];
            out.coeffs_[s ^ t] += term;
        }
    }
    return out;
}

MqElement MqElement::conjugated(SignVector s) const {
    if (s.flips >= dimension())
        throw Error("sign vector out of range for this generator set");
    MqElement out(*this);
    for (std::uint32_t mask = 0; mask < dimension(); ++mask)
        if (std::popcount(mask & s.flips) & 1) out.coeffs_[mask] = -out.coeffs_[mask];
    return out;
}

mpz_class norm(const MqElement& x) {
    const std::uint32_t dim = static_cast<std::uint32_t>(x.dimension());
    MqElement acc(x);
    for (std::uint32_t flips = 1; flips < dim; ++flips)
        acc = acc * x.conjugated(SignVector{flips});
    for (std::uint32_t mask = 1; mask < dim; ++mask)
        if (acc.coeff(mask) != 0)
            throw InvariantViolationError(
                "conjugate product has a nonzero irrational coordinate at mask " +
                std::to_string(mask));
    return acc.coeff(0);
}

Interval eval(const MqElement& x, mpfr_prec_t precision_bits) {
    Interval sum(precision_bits);
    for (std::uint32_t mask = 0; mask < x.dimension(); ++mask) {
        if (x.coeff(mask) == 0) continue;
        Interval term = Interval::sqrt_of(x.basis_square(mask), precision_bits);
        term.scale(x.coeff(mask));
        sum += term;
    }
    return sum;
}

}  // namespace sqrtcmp
