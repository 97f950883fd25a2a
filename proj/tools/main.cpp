#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "sqrtcmp/config.hpp"
#include "sqrtcmp/explorer.hpp"
#include "sqrtcmp/mqalg.hpp"
#include "sqrtcmp/serialize.hpp"

using namespace sqrtcmp;

namespace {

// Exit codes: compare encodes its verdict (0 Less, 1 Equal, 2 Greater);
// every other success is 0. Diagnostics: 64 usage, 65 bad input data,
// 66 resource/budget, 70 internal error or bound violation.
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitResource = 66;
constexpr int kExitInternal = 70;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

void require_not_csv(OutputFormat f, const std::string& cmd) {
    if (f == OutputFormat::Csv)
        throw CLI::ValidationError("--format",
                                   cmd + " has no CSV form (use text or json)");
}

std::string joined(const std::vector<std::uint64_t>& vals, const char* sep = ", ") {
    std::string out;
    for (auto v : vals) out += (out.empty() ? "" : sep) + std::to_string(v);
    return out;
}

void print_bound_text(const BoundReport& r) {
    std::printf("k                  %llu\n", static_cast<unsigned long long>(r.k));
    std::printf("n                  %s\n", r.n.get_str().c_str());
    std::printf("m                  %u\n", r.m);
    std::printf("generator policy   %s\n", to_string(r.generator_policy).c_str());
    std::printf("log2(2k sqrt n)    %s\n", format_double(r.conj_magnitude_log2).c_str());
    std::printf("proof bound log2   %s  (exponent 2^m - 1)\n",
                format_double(r.proof_bound_log2).c_str());
    std::printf("stated bound log2  %s  (exponent 2^(m+1))\n",
                format_double(r.stated_bound_log2).c_str());
    if (r.saturated) std::printf("saturated          true\n");
    const PrecisionCap cap = precision_cap(r);
    if (cap.unbounded)
        std::printf("precision cap      unbounded\n");
    else
        std::printf("precision cap      %llu bits\n",
                    static_cast<unsigned long long>(cap.bits));
}

void print_gap_text(const MinGapResult& r) {
    std::printf("r(%llu,%llu) in [%s, %s]\n", static_cast<unsigned long long>(r.n),
                static_cast<unsigned long long>(r.k), r.gap_lo_string.c_str(),
                r.gap_hi_string.c_str());
    std::printf("log2(r)            in [%s, %s]\n", format_double(r.gap_log2_lo).c_str(),
                format_double(r.gap_log2_hi).c_str());
    std::printf("witness            {%s} | {%s}\n", joined(r.witness_a).c_str(),
                joined(r.witness_b).c_str());
    std::printf("gap                %s\n", r.gap.to_string().c_str());
    std::printf("proof bound log2   %s  (m = %u, coprime base)\n",
                format_double(r.bound.proof_bound_log2).c_str(), r.bound.m);
    std::printf("stated bound log2  %s\n", format_double(r.bound.stated_bound_log2).c_str());
    std::printf("prime-count bound  %s  (pi(n) = %llu, log2)\n",
                format_double(r.corollary_bound_log2).c_str(),
                static_cast<unsigned long long>(r.pi_n));
}

int cmd_compare(const GlobalConfig& cfg, const std::string& lhs, const std::string& rhs,
                const std::string& policy) {
    require_not_csv(cfg.output_format, "compare");
    const SqrtSum a = SqrtSum::parse(lhs);
    const SqrtSum b = SqrtSum::parse(rhs);
    const CompareCertificate cert = compare(a, b, policy_from_string(policy));
    if (cfg.output_format == OutputFormat::Json)
        std::fputs(dump_json(to_json(cert)).c_str(), stdout);
    else
        std::printf("%s\n", to_string(cert.ordering).c_str());
    switch (cert.ordering) {
        case Ordering::Less: return 0;
        case Ordering::Equal: return 1;
        case Ordering::Greater: return 2;
    }
    return kExitInternal;
}

int cmd_bound(const GlobalConfig& cfg, std::uint64_t k, std::uint64_t n,
              const std::string& policy, const std::vector<std::uint64_t>& radicands) {
    require_not_csv(cfg.output_format, "bound");
    BoundReport report;
    if (radicands.empty()) {
        // no explicit radicands: everything <= n is generated by the primes <= n
        if (n > cfg.sieve_limit)
            throw ResourceError("n exceeds the configured sieve limit " +
                                std::to_string(cfg.sieve_limit) +
                                " (raise --sieve-limit)");
        const std::uint64_t pi_n = prime_count(n);
        report = separation_bounds(k, n, static_cast<unsigned>(pi_n),
                                   GeneratorPolicy::Primes);
    } else {
        std::vector<std::uint64_t> sf;
        for (std::uint64_t v : radicands) {
            const SquarefreePart part = squarefree_decompose(v);
            if (part.radicand >= 2) sf.push_back(part.radicand);
        }
        const GeneratorChoice gen = choose_generators(sf, policy_from_string(policy));
        report = separation_bounds(k, n, gen.m, gen.policy);
    }
    if (cfg.output_format == OutputFormat::Json)
        std::fputs(dump_json(to_json(report)).c_str(), stdout);
    else
        print_bound_text(report);
    return 0;
}

int cmd_norm(const GlobalConfig& cfg, const std::string& expr, const std::string& policy) {
    require_not_csv(cfg.output_format, "norm");
    const SqrtSum sum = SqrtSum::parse(expr);
    const GeneratorChoice gen =
        choose_generators(sum.radicands(), policy_from_string(policy));
    if (!gen.have_set)
        throw NotGeneratedError(
            "the radicands are not pairwise coprime; policy 'self' cannot form a "
            "field basis here (use --policy coprime or primes)");
    if (gen.m > cfg.max_m)
        throw ResourceError("field needs m = " + std::to_string(gen.m) +
                            " generators, above the --max-m limit of " +
                            std::to_string(cfg.max_m));

    MqElement x(gen.set);
    for (const auto& term : sum.terms())
        x.set_coeff(subset_decompose(term.radicand, gen.set), term.coeff);
    const mpz_class value = norm(x);

    if (cfg.output_format == OutputFormat::Json) {
        const nlohmann::json j{{"norm", value.get_str()},
                               {"m", std::to_string(gen.m)},
                               {"element", to_json(x)}};
        std::fputs(dump_json(j).c_str(), stdout);
    } else {
        std::printf("norm        %s\n", value.get_str().c_str());
        std::printf("m           %u\n", gen.m);
        std::printf("generators  {%s}\n", joined(gen.set.values()).c_str());
        std::printf("checked     all %llu non-constant conjugate-product coordinates vanish\n",
                    static_cast<unsigned long long>(x.dimension() - 1));
    }
    return 0;
}

int cmd_rmin(const GlobalConfig& cfg, std::uint64_t n, std::uint64_t k,
             std::uint64_t precision) {
    const ExplorerOptions opt{cfg.jobs, cfg.enumeration_budget, precision};
    const MinGapResult r = min_positive_gap(n, k, opt);
    switch (cfg.output_format) {
        case OutputFormat::Json: std::fputs(dump_json(to_json(r)).c_str(), stdout); break;
        case OutputFormat::Csv: std::fputs(to_csv(r).c_str(), stdout); break;
        case OutputFormat::Text: print_gap_text(r); break;
    }
    return 0;
}

int cmd_validate(const GlobalConfig& cfg, std::uint64_t n, std::uint64_t k,
                 const std::string& policy) {
    const ExplorerOptions opt{cfg.jobs, cfg.enumeration_budget, 256};
    const MarginScanReport rep = scan_margins(n, k, policy_from_string(policy), opt);
    switch (cfg.output_format) {
        case OutputFormat::Json: std::fputs(dump_json(to_json(rep)).c_str(), stdout); break;
        case OutputFormat::Csv: std::fputs(to_csv(rep).c_str(), stdout); break;
        case OutputFormat::Text:
            std::printf("scanned %zu unequal instances (n = %llu, k = %llu, policy %s)\n",
                        rep.rows.size(), static_cast<unsigned long long>(n),
                        static_cast<unsigned long long>(k),
                        to_string(rep.policy).c_str());
            std::printf("%zu violations\n", rep.violations.size());
            for (const auto& row : rep.violations)
                std::printf("VIOLATION  %s vs %s: observed 2^%s vs proof bound 2^%s\n",
                            row.lhs.c_str(), row.rhs.c_str(),
                            format_double(row.observed_log2).c_str(),
                            format_double(row.proof_bound_log2).c_str());
            break;
    }
    return rep.violations.empty() ? 0 : kExitInternal;
}

int cmd_table(const GlobalConfig& cfg, std::uint64_t n_max, std::uint64_t k,
              std::uint64_t precision) {
    const ExplorerOptions opt{cfg.jobs, cfg.enumeration_budget, precision};
    const auto rows = gap_table(n_max, k, opt);
    switch (cfg.output_format) {
        case OutputFormat::Json: std::fputs(dump_json(to_json(rows)).c_str(), stdout); break;
        case OutputFormat::Csv: std::fputs(to_csv(rows).c_str(), stdout); break;
        case OutputFormat::Text:
            for (const auto& r : rows)
                std::printf("n=%-3llu  -log2 r in [%s, %s]  prime-count bound %s\n",
                            static_cast<unsigned long long>(r.n),
                            format_double(-r.gap_log2_hi).c_str(),
                            format_double(-r.gap_log2_lo).c_str(),
                            format_double(r.corollary_bound_log2).c_str());
            break;
    }
    return 0;
}

int cmd_generators(const GlobalConfig& cfg, const std::vector<std::uint64_t>& values,
                   const std::string& policy_name) {
    require_not_csv(cfg.output_format, "generators");
    const GeneratorPolicy policy = policy_from_string(policy_name);

    std::vector<std::uint64_t> radicands;
    std::vector<SquarefreePart> parts;
    for (std::uint64_t v : values) {
        if (v < 2) throw NotSquarefreeError("values must be >= 2, got " + std::to_string(v));
        const SquarefreePart part = squarefree_decompose(v);
        parts.push_back(part);
        if (part.radicand >= 2) radicands.push_back(part.radicand);
    }

    const GeneratorChoice gen = choose_generators(radicands, policy);
    nlohmann::json decomp = nlohmann::json::array();

    if (cfg.output_format == OutputFormat::Text) {
        if (gen.have_set)
            std::printf("generators  {%s}  (m = %u, policy %s)\n",
                        joined(gen.set.values()).c_str(), gen.m,
                        to_string(policy).c_str());
        else
            std::printf("generators  {%s}  (m = %u, policy self; not pairwise coprime)\n",
                        joined(radicands).c_str(), gen.m);
    }

    for (const SquarefreePart& part : parts) {
        std::string factors;
        if (part.cofactor > 1)
            factors = std::to_string(part.cofactor) + "^2 * " + std::to_string(part.radicand);
        std::string subset;
        if (gen.have_set && part.radicand >= 2) {
            const std::uint32_t mask = subset_decompose(part.radicand, gen.set);
            for (unsigned i = 0; i < gen.set.size(); ++i)
                if (mask & (1u << i))
                    subset += (subset.empty() ? "" : " * ") + std::to_string(gen.set[i]);
        } else if (part.radicand >= 2) {
            subset = std::to_string(part.radicand);
        } else {
            subset = "1";
        }
        if (cfg.output_format == OutputFormat::Text) {
            if (!factors.empty())
                std::printf("%llu = %s -> radicand %llu = %s\n",
                            static_cast<unsigned long long>(part.original), factors.c_str(),
                            static_cast<unsigned long long>(part.radicand), subset.c_str());
            else
                std::printf("%llu = %s\n", static_cast<unsigned long long>(part.original),
                            subset.c_str());
        } else {
            decomp.push_back({{"value", std::to_string(part.original)},
                              {"cofactor", std::to_string(part.cofactor)},
                              {"radicand", std::to_string(part.radicand)},
                              {"subset_product", subset}});
        }
    }

    if (cfg.output_format == OutputFormat::Json) {
        nlohmann::json gens = nlohmann::json::array();
        const auto& list = gen.have_set ? gen.set.values() : radicands;
        for (auto g : list) gens.push_back(std::to_string(g));
        const nlohmann::json j{{"generators", gens},
                               {"m", std::to_string(gen.m)},
                               {"policy", to_string(policy)},
                               {"pairwise_coprime", gen.have_set},
                               {"decompositions", decomp}};
        std::fputs(dump_json(j).c_str(), stdout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare sums of integer square roots with certified precision bounds"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "text";
    app.add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for the exhaustive commands")
        ->capture_default_str();
    app.add_option("--budget", cfg.enumeration_budget,
                   "largest allowed pair-space size binom(n+k-1,k)^2")
        ->capture_default_str();
    app.add_option("--max-m", cfg.max_m, "largest generator count for norm computations")
        ->check(CLI::Range(1u, kMaxGeneratorsCeiling))
        ->capture_default_str();
    app.add_option("--sieve-limit", cfg.sieve_limit, "largest n the prime sieve accepts")
        ->capture_default_str();

    std::string expr1, expr2, expr, policy = "coprime";
    std::uint64_t k = 1, n = 2, n_max = 10, precision = 256;
    std::vector<std::uint64_t> radicands, values;

    CLI::App* c_compare = app.add_subcommand("compare", "decide the order of two sums");
    c_compare->add_option("lhs", expr1, "left expression")->required();
    c_compare->add_option("rhs", expr2, "right expression")->required();
    const auto policy_check = CLI::IsMember({"self", "primes", "coprime"});
    c_compare->add_option("--policy", policy, "generator policy: self, primes, coprime")
        ->check(policy_check)
        ->capture_default_str();

    CLI::App* c_bound = app.add_subcommand("bound", "print the separation bound report");
    c_bound->add_option("--k", k, "terms per side")->required();
    c_bound->add_option("--n", n, "bound on c^2 * a per term")->required();
    c_bound->add_option("--policy", policy)->check(policy_check)->capture_default_str();
    c_bound
        ->add_option("--radicands", radicands,
                     "explicit radicand list; omit to use the primes <= n")
        ->delimiter(',');

    CLI::App* c_norm = app.add_subcommand("norm", "exact field norm of an expression");
    c_norm->add_option("expr", expr, "expression")->required();
    c_norm->add_option("--policy", policy)->check(policy_check)->capture_default_str();

    CLI::App* c_rmin = app.add_subcommand("rmin", "minimum positive gap r(n,k)");
    c_rmin->add_option("--n", n)->required();
    c_rmin->add_option("--k", k)->required();
    c_rmin->add_option("--precision", precision, "reporting precision in bits")
        ->capture_default_str();

    CLI::App* c_validate =
        app.add_subcommand("validate", "check every instance against the bounds");
    c_validate->add_option("--n", n)->required();
    c_validate->add_option("--k", k)->required();
    c_validate->add_option("--policy", policy)->check(policy_check)->capture_default_str();

    CLI::App* c_table = app.add_subcommand("table", "r(n,k) rows for n = 2..nmax");
    c_table->add_option("--nmax", n_max)->required();
    c_table->add_option("--k", k)->required();
    c_table->add_option("--precision", precision)->capture_default_str();

    CLI::App* c_generators =
        app.add_subcommand("generators", "generator set and subset decompositions");
    c_generators->add_option("values", values, "integers >= 2")->required();
    c_generators->add_option("--policy", policy)->check(policy_check)->capture_default_str();

    try {
        app.parse(argc, argv);
        cfg.output_format = parse_format(format);

        if (c_compare->parsed()) return cmd_compare(cfg, expr1, expr2, policy);
        if (c_bound->parsed()) return cmd_bound(cfg, k, n, policy, radicands);
        if (c_norm->parsed()) return cmd_norm(cfg, expr, policy);
        if (c_rmin->parsed()) return cmd_rmin(cfg, n, k, precision);
        if (c_validate->parsed()) return cmd_validate(cfg, n, k, policy);
        if (c_table->parsed()) return cmd_table(cfg, n_max, k, precision);
        if (c_generators->parsed()) return cmd_generators(cfg, values, policy);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const NotSquarefreeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const NotGeneratedError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitResource;
    } catch (const BoundViolationError& e) {
        std::fprintf(stderr, "bound violation: %s\n", e.what());
        return kExitInternal;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
}
