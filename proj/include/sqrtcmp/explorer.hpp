#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqrtcmp/cmpcore.hpp"
#include "sqrtcmp/sepbound.hpp"

namespace sqrtcmp {

/// Exhaustive-search knobs. Work is split into contiguous chunks of the
/// lexicographic pair-rank space; merging is a deterministic fold in rank
/// order, so results are bit-identical for any worker count.
struct ExplorerOptions {
    unsigned jobs = 1;
    std::uint64_t budget = 10'000'000;   // cap on binom(n+k-1,k)^2
    std::uint64_t precision_bits = 256;  // reporting precision
};

/// The minimum positive difference between two k-term sums of square roots
/// of integers in [1, n], with the attaining pair (sides oriented so the
/// difference is positive) and the bounds it is measured against.
struct MinGapResult {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::vector<std::uint64_t> witness_a;  // larger side, ascending
    std::vector<std::uint64_t> witness_b;  // smaller side, ascending
    SqrtSum gap;                           // canonical witness difference
    double gap_log2_lo = 0.0;              // log2 enclosure of the gap
    double gap_log2_hi = 0.0;
    std::string gap_lo_string;             // decimal enclosure endpoints
    std::string gap_hi_string;
    BoundReport bound;                     // separation bound for the witness
    std::uint64_t pi_n = 0;                // exact prime count <= n
    double corollary_bound_log2 = 0.0;     // (2^pi(n)-1)*log2(2k sqrt(n))
};

MinGapResult min_positive_gap(std::uint64_t n, std::uint64_t k,
                              const ExplorerOptions& opt = {});

/// One enumerated unequal instance checked against both bound variants.
/// margin = observed_log2 - proof_bound_log2 must be positive; rows with
/// margin <= 0 are collected separately as violations.
struct MarginRow {
    std::string lhs;
    std::string rhs;
    double observed_log2 = 0.0;  // log2 of the certified lower enclosure end
    double proof_bound_log2 = 0.0;
    double stated_bound_log2 = 0.0;
    unsigned m_used = 0;
    double margin = 0.0;
};

struct MarginScanReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    GeneratorPolicy policy = GeneratorPolicy::Coprime;
    std::vector<MarginRow> rows;        // in enumeration order
    std::vector<MarginRow> violations;  // expected empty
};

/// Scans every unordered pair of k-term multisets over [1, n], skips
/// equal-value pairs, and checks the observed |difference| of each
/// remaining instance against its separation bound under `policy`.
MarginScanReport scan_margins(std::uint64_t n, std::uint64_t k,
                              GeneratorPolicy policy,
                              const ExplorerOptions& opt = {});

/// Rows n = 2..n_max of min_positive_gap, pitting the observed gap against
/// the prime-count bound.
std::vector<MinGapResult> gap_table(std::uint64_t n_max, std::uint64_t k,
                                    const ExplorerOptions& opt = {});

/// Multisets of size k over [1, n] in lexicographic order; the enumeration
/// backbone shared by the scans above. Exposed for tests.
std::vector<std::vector<std::uint64_t>> enumerate_multisets(std::uint64_t n,
                                                            std::uint64_t k);

/// binom(n+k-1, k)^2, the budgeted pair-space size; throws ResourceError
/// when it exceeds `budget`.
std::uint64_t pair_space_size(std::uint64_t n, std::uint64_t k,
                              std::uint64_t budget);

}  // namespace sqrtcmp
