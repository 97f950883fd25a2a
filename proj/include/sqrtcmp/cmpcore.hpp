#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqrtcmp/interval.hpp"
#include "sqrtcmp/numthy.hpp"
#include "sqrtcmp/sepbound.hpp"

namespace sqrtcmp {

/// A term as parsed, before canonicalization: coeff * sqrt(radicand).
/// radicand 0 and coeff 0 are legal here and vanish on canonicalization.
struct RawTerm {
    std::int64_t coeff;
    std::uint64_t radicand;
    friend bool operator==(const RawTerm&, const RawTerm&) = default;
};

/// Grammar:
///   expr := term (('+'|'-') term)*
///   term := [uint '*'] 'sqrt' '(' uint ')' | uint
///   uint := decimal digits, value <= 2^63 - 1
/// Whitespace between tokens is insignificant. A bare integer u is the
/// rational term u*sqrt(1). Throws ParseError with the offending position.
std::vector<RawTerm> parse_expr(std::string_view text);

struct SqrtTerm {
    mpz_class coeff;          // nonzero
    std::uint64_t radicand;   // square-free, >= 1
    friend bool operator==(const SqrtTerm&, const SqrtTerm&) = default;
};

/// Canonical radical sum: square-free radicands, strictly increasing, no
/// zero coefficients. Since square roots of distinct square-free integers
/// are linearly independent over Q, two raw term lists denote the same real
/// number exactly when their canonical forms are identical.
class SqrtSum {
  public:
    SqrtSum() = default;  // the zero sum

    static SqrtSum canonicalize(std::span<const RawTerm> raw);
    static SqrtSum parse(std::string_view text);  // parse_expr + canonicalize

    const std::vector<SqrtTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// max(#positive terms, #negative terms); the per-side term count k
    /// the separation bound is instantiated with.
    std::uint64_t k_effective() const;
    /// max over terms of coeff^2 * radicand (1 for the zero sum).
    mpz_class n_effective() const;
    /// Distinct radicands >= 2 (radicand 1 decomposes as the empty subset).
    std::vector<std::uint64_t> radicands() const;

    SqrtSum operator-() const;
    friend SqrtSum operator-(const SqrtSum& lhs, const SqrtSum& rhs);
    friend SqrtSum operator+(const SqrtSum& lhs, const SqrtSum& rhs);

    std::string to_string() const;  // round-trips through parse for nonzero sums

    friend bool operator==(const SqrtSum&, const SqrtSum&) = default;

  private:
    std::vector<SqrtTerm> terms_;
};

inline bool sums_equal(const SqrtSum& a, const SqrtSum& b) { return a == b; }

/// Enclosure of the sum's value at the given working precision.
Interval eval_interval(const SqrtSum& s, mpfr_prec_t precision_bits);

enum class Ordering { Less, Equal, Greater };
enum class CompareMethod { SyntacticEquality, IntervalSeparation };

std::string to_string(Ordering o);
std::string to_string(CompareMethod m);

/// Verdict plus the evidence that justifies it: which method decided, the
/// precision ladder that was tried, the final enclosure width, and the
/// separation bound that capped the search (absent for syntactic equality,
/// where no numeric work happens at all).
struct CompareCertificate {
    Ordering ordering = Ordering::Equal;
    CompareMethod method = CompareMethod::SyntacticEquality;
    std::vector<std::uint64_t> precisions_tried;
    double final_interval_log2_width = -std::numeric_limits<double>::infinity();
    std::optional<BoundReport> bound;
};

/// Decides the order of two canonical sums. Equality is purely syntactic.
/// Otherwise the difference is evaluated at doubling precisions (64, 128,
/// ...) until its enclosure excludes zero; the separation bound guarantees
/// that happens before the enclosure gets narrower than the bound itself.
/// An enclosure narrower than the stated bound that still straddles zero
/// throws BoundViolationError.
CompareCertificate compare(const SqrtSum& lhs, const SqrtSum& rhs,
                           GeneratorPolicy policy = GeneratorPolicy::Coprime);

}  // namespace sqrtcmp
