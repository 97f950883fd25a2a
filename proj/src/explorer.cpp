#include "sqrtcmp/explorer.hpp"

#include <algorithm>
#include <thread>

namespace sqrtcmp {

namespace {

using u64 = std::uint64_t;

// binom(a, b) clamped to +inf-like sentinel on overflow.
u64 binom_or_max(u64 a, u64 b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    u64 r = 1;
    for (u64 i = 1; i <= b; ++i) {
        const u64 num = a - b + i;
        if (r > std::numeric_limits<u64>::max() / num) return std::numeric_limits<u64>::max();
        r = r * num / i;  // product of i consecutive integers is divisible by i!
    }
    return r;
}

SqrtSum sum_of_roots(const std::vector<u64>& multiset) {
    std::vector<RawTerm> raw;
    raw.reserve(multiset.size());
    for (u64 v : multiset) raw.push_back({1, v});
    return SqrtSum::canonicalize(raw);
}

// log2 |v| rounded toward -inf; exact for powers of two, so log2(1) == 0.0.
double exact_log2_floor(const mpz_class& v) {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_z(t, mpz_class(abs(v)).get_mpz_t(), MPFR_RNDD);
    mpfr_log2(t, t, MPFR_RNDD);
    const double out = mpfr_get_d(t, MPFR_RNDD);
    mpfr_clear(t);
    return out;
}

// Evaluate |diff| (diff already oriented positive) until the enclosure
// certifies a positive lower end; the separation bound guarantees this
// terminates for nonzero sums.
Interval positive_enclosure(const SqrtSum& diff, u64 start_bits = 64) {
    for (u64 prec = start_bits;; prec *= 2) {
        Interval enc = eval_interval(diff, static_cast<mpfr_prec_t>(prec));
        if (enc.sign() > 0) return enc;
        if (enc.sign() < 0)
            throw InvariantViolationError("expected a positive difference");
    }
}

// (i, j) with i < j from the flattened rank of the upper-triangular pair
// enumeration: rank = i*P - i*(i+1)/2 + (j - i - 1).
std::pair<u64, u64> unrank_pair(u64 rank, const std::vector<u64>& row_start) {
    const auto it = std::upper_bound(row_start.begin(), row_start.end(), rank);
    const u64 i = static_cast<u64>(it - row_start.begin()) - 1;
    const u64 j = i + 1 + (rank - row_start[i]);
    return {i, j};
}

// Chunked scan over all unordered pairs of distinct multiset ranks. Returns
// one result per contiguous chunk, in rank order, so callers can fold them
// deterministically regardless of the worker count.
template <typename ChunkResult, typename PerPair>
std::vector<ChunkResult> scan_pairs(u64 pair_count, unsigned jobs,
                                    const std::vector<u64>& row_start,
                                    PerPair per_pair) {
    const unsigned workers = static_cast<unsigned>(
        std::min<u64>(std::max(1u, jobs), std::max<u64>(pair_count, 1)));
    std::vector<ChunkResult> results(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const u64 begin = pair_count * w / workers;
        const u64 end = pair_count * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            ChunkResult local{};
            for (u64 rank = begin; rank < end; ++rank) {
                const auto [i, j] = unrank_pair(rank, row_start);
                per_pair(local, rank, i, j);
            }
            results[w] = std::move(local);
        });
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace

std::vector<std::vector<u64>> enumerate_multisets(u64 n, u64 k) {
    std::vector<std::vector<u64>> out;
    std::vector<u64> cur(k, 1);
    while (true) {
        out.push_back(cur);
        // next multiset in lex order: bump the rightmost slot below n
        std::size_t pos = k;
        while (pos > 0 && cur[pos - 1] == n) --pos;
        if (pos == 0) break;
        const u64 v = cur[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < k; ++i) cur[i] = v;
    }
    return out;
}

u64 pair_space_size(u64 n, u64 k, u64 budget) {
    const u64 multisets = binom_or_max(n + k - 1, k);
    const bool overflow = multisets > std::numeric_limits<u64>::max() / multisets;
    const u64 squared = overflow ? std::numeric_limits<u64>::max() : multisets * multisets;
    if (squared > budget)
        throw ResourceError("pair space of size " +
                            (overflow ? std::string("over 2^64") : std::to_string(squared)) +
                            " exceeds the enumeration budget " + std::to_string(budget) +
                            " (raise --budget to override)");
    return squared;
}

MinGapResult min_positive_gap(u64 n, u64 k, const ExplorerOptions& opt) {
    if (n < 2 || k < 1) throw Error("min_positive_gap requires n >= 2 and k >= 1");
    pair_space_size(n, k, opt.budget);

    const auto multisets = enumerate_multisets(n, k);
    const u64 p = multisets.size();
    std::vector<SqrtSum> sums(p);
    for (u64 i = 0; i < p; ++i) sums[i] = sum_of_roots(multisets[i]);

    std::vector<u64> row_start(p, 0);
    for (u64 i = 1; i < p; ++i) row_start[i] = row_start[i - 1] + (p - i);
    const u64 pair_count = p * (p - 1) / 2;

    struct Best {
        bool found = false;
        u64 rank = 0;
        SqrtSum gap;      // positive canonical difference
        u64 larger = 0;   // multiset index of the larger side
        u64 smaller = 0;
    };
    auto consider = [&](Best& best, u64 rank, u64 i, u64 j) {
        const CompareCertificate order = compare(sums[i], sums[j]);
        if (order.ordering == Ordering::Equal) return;
        const u64 larger = order.ordering == Ordering::Greater ? i : j;
        const u64 smaller = larger == i ? j : i;
        SqrtSum gap = sums[larger] - sums[smaller];
        if (!best.found) {
            best = {true, rank, std::move(gap), larger, smaller};
            return;
        }
        const CompareCertificate vs = compare(gap, best.gap);
        if (vs.ordering == Ordering::Less)
            best = {true, rank, std::move(gap), larger, smaller};
        // ties keep the earlier rank
    };

    std::vector<Best> chunks = scan_pairs<Best>(pair_count, opt.jobs, row_start, consider);

    Best best;
    for (Best& c : chunks) {
        if (!c.found) continue;
        if (!best.found) {
            best = std::move(c);
            continue;
        }
        if (compare(c.gap, best.gap).ordering == Ordering::Less) best = std::move(c);
    }
    if (!best.found)
        throw Error("no positive difference exists in this search space");

    MinGapResult out;
    out.n = n;
    out.k = k;
    out.witness_a = multisets[best.larger];
    out.witness_b = multisets[best.smaller];
    out.gap = best.gap;

    const Interval enc =
        positive_enclosure(best.gap, std::max<u64>(64, opt.precision_bits));
    out.gap_log2_lo = enc.log2_lo();
    out.gap_log2_hi = enc.log2_hi();
    const int digits = static_cast<int>(opt.precision_bits / 3) + 2;
    out.gap_lo_string = enc.lo_string(digits);
    out.gap_hi_string = enc.hi_string(digits);

    const GeneratorChoice gen =
        choose_generators(best.gap.radicands(), GeneratorPolicy::Coprime);
    out.bound = separation_bounds(best.gap.k_effective(), best.gap.n_effective(),
                                  gen.m, GeneratorPolicy::Coprime);
    const PrimeBound pb = prime_generator_bound(n, k);
    out.pi_n = pb.pi_n;
    out.corollary_bound_log2 = pb.log2_bound;
    return out;
}

MarginScanReport scan_margins(u64 n, u64 k, GeneratorPolicy policy,
                              const ExplorerOptions& opt) {
    if (n < 2 || k < 1) throw Error("scan_margins requires n >= 2 and k >= 1");
    pair_space_size(n, k, opt.budget);

    const auto multisets = enumerate_multisets(n, k);
    const u64 p = multisets.size();
    std::vector<SqrtSum> sums(p);
    for (u64 i = 0; i < p; ++i) sums[i] = sum_of_roots(multisets[i]);

    std::vector<u64> row_start(p, 0);
    for (u64 i = 1; i < p; ++i) row_start[i] = row_start[i - 1] + (p - i);
    const u64 pair_count = p * (p - 1) / 2;

    auto per_pair = [&](std::vector<MarginRow>& rows, u64 /*rank*/, u64 i, u64 j) {
        const CompareCertificate order = compare(sums[i], sums[j], policy);
        if (order.ordering == Ordering::Equal) return;  // zero differences excluded
        const SqrtSum gap = order.ordering == Ordering::Greater ? sums[i] - sums[j]
                                                                : sums[j] - sums[i];

        MarginRow row;
        row.lhs = sums[i].to_string();
        row.rhs = sums[j].to_string();
        row.proof_bound_log2 = order.bound->proof_bound_log2;
        row.stated_bound_log2 = order.bound->stated_bound_log2;
        row.m_used = order.bound->m;
        if (row.m_used == 0) {
            // the difference is an exact nonzero integer; take its log2
            // directly instead of as a certified lower enclosure end
            row.observed_log2 = exact_log2_floor(gap.terms().front().coeff);
        } else {
            row.observed_log2 = positive_enclosure(gap).log2_lo();
        }
        row.margin = row.observed_log2 - row.proof_bound_log2;
        rows.push_back(std::move(row));
    };

    std::vector<std::vector<MarginRow>> chunks =
        scan_pairs<std::vector<MarginRow>>(pair_count, opt.jobs, row_start, per_pair);

    MarginScanReport report;
    report.n = n;
    report.k = k;
    report.policy = policy;
    for (auto& chunk : chunks)
        for (auto& row : chunk) {
            // m = 0 means an integer difference, where the proof-side bound
            // (2k sqrt n)^0 = 1 is met with equality by |d| = 1; the strict
            // check applies to the radical cases
            const bool violated = row.m_used == 0 ? row.margin < 0 : row.margin <= 0;
            if (violated) report.violations.push_back(row);
            report.rows.push_back(std::move(row));
        }
    return report;
}

std::vector<MinGapResult> gap_table(u64 n_max, u64 k, const ExplorerOptions& opt) {
    if (n_max < 2) throw Error("gap_table requires n_max >= 2");
    std::vector<MinGapResult> rows;
    for (u64 n = 2; n <= n_max; ++n) rows.push_back(min_positive_gap(n, k, opt));
    return rows;
}

}  // namespace sqrtcmp
