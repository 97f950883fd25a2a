#include "sqrtcmp/numthy.hpp"

#include <algorithm>
#include <numeric>

namespace sqrtcmp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 mod) {
    return static_cast<u64>(u128(a) * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 pollard_rho(u64 n) {
    // Brent's cycle detection; n must be odd, composite, not a prime power
    // guard is not needed since we retry with a different increment.
    for (u64 inc = 1;; ++inc) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = 0, q = 1;
        const unsigned step = 128;
        for (u64 r = 1; d == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + inc) % n;
            for (u64 i = 0; i < r && d == 1; i += step) {
                ys = y;
                const u64 lim = std::min<u64>(step, r - i);
                for (u64 j = 0; j < lim; ++j) {
                    y = (mulmod(y, y, n) + inc) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
        }
        if (d == n) {
            // backtrack one by one
            do {
                ys = (mulmod(ys, ys, n) + inc) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64>& primes_out) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes_out.push_back(n);
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, primes_out);
    factor_into(n / d, primes_out);
}

void require_squarefree_inputs(std::span<const u64> values) {
    for (u64 v : values) {
        if (v < 2)
            throw NotSquarefreeError("generator inputs must be >= 2, got " +
                                     std::to_string(v));
        if (!is_squarefree(v))
            throw NotSquarefreeError(
                std::to_string(v) +
                " is not square-free; decompose it first (see squarefree_decompose)");
    }
}

}  // namespace

std::string to_string(GeneratorPolicy policy) {
    switch (policy) {
        case GeneratorPolicy::Self: return "self";
        case GeneratorPolicy::Primes: return "primes";
        case GeneratorPolicy::Coprime: return "coprime";
    }
    return "coprime";
}

GeneratorPolicy policy_from_string(const std::string& name) {
    if (name == "self") return GeneratorPolicy::Self;
    if (name == "primes") return GeneratorPolicy::Primes;
    if (name == "coprime") return GeneratorPolicy::Coprime;
    throw Error("unknown generator policy '" + name + "' (want self|primes|coprime)");
}

GeneratorSet::GeneratorSet(std::vector<std::uint64_t> generators) : gens_(std::move(generators)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.size() > kMaxGeneratorsCeiling)
        throw ResourceError("generator set of size " + std::to_string(gens_.size()) +
                            " exceeds the hard ceiling of " +
                            std::to_string(kMaxGeneratorsCeiling));
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i] < 2)
            throw Error("generator " + std::to_string(gens_[i]) + " must be >= 2");
        if (!is_squarefree(gens_[i]))
            throw NotSquarefreeError("generator " + std::to_string(gens_[i]) +
                                     " is not square-free");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (std::gcd(gens_[i], gens_[j]) != 1)
                throw Error("generators " + std::to_string(gens_[i]) + " and " +
                            std::to_string(gens_[j]) + " are not coprime");
    }
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit > kSieveHardCap)
        throw ResourceError("sieve limit " + std::to_string(limit) +
                            " exceeds the supported maximum " +
                            std::to_string(kSieveHardCap));
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

std::uint64_t prime_count(std::uint64_t limit) {
    return sieve_primes(limit).size();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for the full 64-bit range with this base set.
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw Error("factorize requires n >= 1");
    Factorization f;
    f.value = n;
    u64 rest = n;
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    for (u64 p = 11; p <= 100'000 && p * p <= rest; p += 2) {
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    if (rest > 1) factor_into(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

SquarefreePart squarefree_decompose(std::uint64_t n) {
    if (n == 0) throw Error("squarefree_decompose requires n >= 1");
    const Factorization f = factorize(n);
    u64 cofactor = 1, radicand = 1;
    for (const auto& [p, e] : f.factors) {
        for (unsigned i = 0; i + 1 < e; i += 2) cofactor *= p;
        if (e & 1) radicand *= p;
    }
    return {n, cofactor, radicand};
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    return squarefree_decompose(n).cofactor == 1;
}

GeneratorSet coprime_base(std::span<const std::uint64_t> values) {
    require_squarefree_inputs(values);
    std::vector<u64> base(values.begin(), values.end());
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());

    // gcd refinement: split any two sharing a factor into gcd and cofactors
    // until pairwise coprime. Inputs are square-free, so every piece stays
    // square-free and subset products reconstruct the inputs exactly.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < base.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                const u64 g = std::gcd(base[i], base[j]);
                if (g == 1) continue;
                const u64 x = base[i] / g, y = base[j] / g;
                base.erase(base.begin() + j);
                base.erase(base.begin() + i);
                base.push_back(g);
                if (x > 1) base.push_back(x);
                if (y > 1) base.push_back(y);
                std::sort(base.begin(), base.end());
                base.erase(std::unique(base.begin(), base.end()), base.end());
                changed = true;
            }
        }
    }
    return GeneratorSet(std::move(base));
}

GeneratorSet prime_generators(std::span<const std::uint64_t> values) {
    require_squarefree_inputs(values);
    std::vector<u64> primes;
    for (u64 v : values)
        for (const auto& [p, e] : factorize(v).factors) primes.push_back(p);
    return GeneratorSet(std::move(primes));
}

std::uint32_t subset_decompose(std::uint64_t a, const GeneratorSet& base) {
    if (a == 0) throw Error("subset_decompose requires a >= 1");
    std::uint32_t mask = 0;
    u64 rest = a;
    for (unsigned i = 0; i < base.size(); ++i) {
        if (rest % base[i] == 0) {
            mask |= std::uint32_t{1} << i;
            rest /= base[i];
        }
    }
    if (rest != 1)
        throw NotGeneratedError(std::to_string(a) +
                                " is not a subset product of the generator set");
    return mask;
}

GeneratorChoice choose_generators(std::span<const std::uint64_t> radicands,
                                  GeneratorPolicy policy) {
    require_squarefree_inputs(radicands);
    std::vector<u64> vals(radicands.begin(), radicands.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    GeneratorChoice choice;
    choice.policy = policy;
    switch (policy) {
        case GeneratorPolicy::Self: {
            choice.m = static_cast<unsigned>(vals.size());
            bool coprime = true;
            for (std::size_t i = 0; i < vals.size() && coprime; ++i)
                for (std::size_t j = i + 1; j < vals.size() && coprime; ++j)
                    if (std::gcd(vals[i], vals[j]) != 1) coprime = false;
            choice.have_set = coprime && vals.size() <= kMaxGeneratorsCeiling;
            if (choice.have_set) choice.set = GeneratorSet(std::move(vals));
            break;
        }
        case GeneratorPolicy::Primes:
            choice.set = prime_generators(vals);
            choice.m = choice.set.size();
            choice.have_set = true;
            break;
        case GeneratorPolicy::Coprime:
            choice.set = coprime_base(vals);
            choice.m = choice.set.size();
            choice.have_set = true;
            break;
    }
    return choice;
}

}  // namespace sqrtcmp
