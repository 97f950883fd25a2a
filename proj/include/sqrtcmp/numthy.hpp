#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sqrtcmp/config.hpp"
#include "sqrtcmp/errors.hpp"

namespace sqrtcmp {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as a product of prime powers, primes strictly increasing.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;  // empty for value == 1
};

// n = cofactor^2 * radicand with radicand square-free, so
// sqrt(n) = cofactor * sqrt(radicand).
struct SquarefreePart {
    std::uint64_t original;
    std::uint64_t cofactor;
    std::uint64_t radicand;
    friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// Pairwise-coprime square-free integers >= 2, sorted ascending. Such a set
/// generates exactly the subset products of its elements, each square-free
/// integer in at most one way, which is what the field construction in
/// mqalg and the separation bounds rely on.
class GeneratorSet {
  public:
    GeneratorSet() = default;

    // Validates: every element >= 2, square-free, pairwise coprime,
    // size <= kMaxGeneratorsCeiling. Sorts and deduplicates.
    explicit GeneratorSet(std::vector<std::uint64_t> generators);

    unsigned size() const { return static_cast<unsigned>(gens_.size()); }
    bool empty() const { return gens_.empty(); }
    std::uint64_t operator[](unsigned i) const { return gens_[i]; }
    const std::vector<std::uint64_t>& values() const { return gens_; }

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

  private:
    std::vector<std::uint64_t> gens_;
};

enum class GeneratorPolicy { Self, Primes, Coprime };

std::string to_string(GeneratorPolicy policy);
GeneratorPolicy policy_from_string(const std::string& name);

/// All primes in [2, limit], ascending. limit < 2 yields the empty list.
/// Throws ResourceError above kSieveHardCap.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

std::uint64_t prime_count(std::uint64_t limit);  // exact pi(limit)

/// Deterministic for the full uint64 range (Miller-Rabin, fixed base set).
bool is_prime(std::uint64_t n);

/// Trial division by small primes, then Pollard rho on the cofactor.
/// factorize(1) has an empty factor list.
Factorization factorize(std::uint64_t n);

SquarefreePart squarefree_decompose(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Refines the inputs (all >= 2 and square-free, else NotSquarefreeError)
/// into a pairwise-coprime base by repeated gcd splitting. Every input is a
/// subset product of the result, and the result is never larger than the
/// set of primes dividing the inputs.
GeneratorSet coprime_base(std::span<const std::uint64_t> values);

/// The set of all primes dividing any input (inputs validated as for
/// coprime_base).
GeneratorSet prime_generators(std::span<const std::uint64_t> values);

/// The unique S with a = prod_{i in S} base[i], as a bitmask (bit i set =
/// base[i] selected). a == 1 maps to the empty mask. Throws
/// NotGeneratedError when no such subset exists.
std::uint32_t subset_decompose(std::uint64_t a, const GeneratorSet& base);

/// Generator selection for a set of square-free radicands >= 2.
/// Self keeps the radicands themselves (m = their count; a usable
/// GeneratorSet exists only when they happen to be pairwise coprime),
/// Primes takes every prime divisor, Coprime runs gcd refinement.
struct GeneratorChoice {
    GeneratorPolicy policy;
    unsigned m;
    bool have_set;      // false only under Self with non-coprime radicands
    GeneratorSet set;   // valid iff have_set
};

GeneratorChoice choose_generators(std::span<const std::uint64_t> radicands,
                                  GeneratorPolicy policy);

}  // namespace sqrtcmp
