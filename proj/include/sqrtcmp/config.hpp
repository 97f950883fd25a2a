#pragma once

#include <cstdint>

namespace sqrtcmp {

enum class OutputFormat { Text, Json, Csv };

// Field dimension is 2^m; masks are stored in 32-bit words and the dense
// coefficient vector must stay addressable.
inline constexpr unsigned kMaxGeneratorsCeiling = 30;

// Largest sieve the library will attempt regardless of configuration.
inline constexpr std::uint64_t kSieveHardCap = std::uint64_t{1} << 31;

struct GlobalConfig {
    std::uint64_t sieve_limit = 1'000'000;
    unsigned max_m = 20;                          // <= kMaxGeneratorsCeiling
    std::uint64_t enumeration_budget = 10'000'000;
    OutputFormat output_format = OutputFormat::Text;
    unsigned jobs = 1;
};

}  // namespace sqrtcmp
