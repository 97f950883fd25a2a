#include "sqrtcmp/serialize.hpp"

#include <charconv>
#include <cmath>

namespace sqrtcmp {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (auto v : values) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

json margin_row_json(const MarginRow& row) {
    return json{{"lhs", row.lhs},
                {"rhs", row.rhs},
                {"observed_log2", format_double(row.observed_log2)},
                {"proof_bound_log2", format_double(row.proof_bound_log2)},
                {"stated_bound_log2", format_double(row.stated_bound_log2)},
                {"m_used", std::to_string(row.m_used)},
                {"margin", format_double(row.margin)}};
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(const BoundReport& r) {
    return json{{"k", std::to_string(r.k)},
                {"n", r.n.get_str()},
                {"m", std::to_string(r.m)},
                {"conj_magnitude_log2", format_double(r.conj_magnitude_log2)},
                {"proof_bound_log2", format_double(r.proof_bound_log2)},
                {"stated_bound_log2", format_double(r.stated_bound_log2)},
                {"generator_policy", to_string(r.generator_policy)},
                {"saturated", r.saturated}};
}

json to_json(const CompareCertificate& c) {
    json precisions = json::array();
    for (auto p : c.precisions_tried) precisions.push_back(std::to_string(p));
    json out{{"ordering", to_string(c.ordering)},
             {"method", to_string(c.method)},
             {"precisions_tried", precisions},
             {"final_interval_log2_width", format_double(c.final_interval_log2_width)}};
    out["bound"] = c.bound ? to_json(*c.bound) : json(nullptr);
    return out;
}

json to_json(const MinGapResult& r) {
    return json{{"n", std::to_string(r.n)},
                {"k", std::to_string(r.k)},
                {"rmin_log2_lo", format_double(r.gap_log2_lo)},
                {"rmin_log2_hi", format_double(r.gap_log2_hi)},
                {"rmin_lo", r.gap_lo_string},
                {"rmin_hi", r.gap_hi_string},
                {"witness_a", join_u64(r.witness_a)},
                {"witness_b", join_u64(r.witness_b)},
                {"gap", r.gap.to_string()},
                {"proof_bound_log2", format_double(r.bound.proof_bound_log2)},
                {"stated_bound_log2", format_double(r.bound.stated_bound_log2)},
                {"corollary_bound_log2", format_double(r.corollary_bound_log2)},
                {"pi_n", std::to_string(r.pi_n)},
                {"bound", to_json(r.bound)}};
}

json to_json(const MarginScanReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(margin_row_json(row));
    json violations = json::array();
    for (const auto& row : r.violations) violations.push_back(margin_row_json(row));
    return json{{"n", std::to_string(r.n)},
                {"k", std::to_string(r.k)},
                {"policy", to_string(r.policy)},
                {"rows", rows},
                {"violations", violations}};
}

json to_json(const std::vector<MinGapResult>& rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    return out;
}

json to_json(const MqElement& x) {
    json gens = json::array();
    for (auto g : x.generators().values()) gens.push_back(std::to_string(g));
    json coeffs = json::array();
    for (std::uint32_t mask = 0; mask < x.dimension(); ++mask)
        if (x.coeff(mask) != 0)
            coeffs.push_back(json::array({std::to_string(mask), x.coeff(mask).get_str()}));
    return json{{"generators", gens}, {"coeffs", coeffs}};
}

MqElement element_from_json(const json& j) {
    std::vector<std::uint64_t> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(std::stoull(g.get<std::string>()));
    MqElement x{GeneratorSet(std::move(gens))};
    for (const auto& pair : j.at("coeffs")) {
        const std::uint32_t mask =
            static_cast<std::uint32_t>(std::stoul(pair.at(0).get<std::string>()));
        x.set_coeff(mask, mpz_class(pair.at(1).get<std::string>()));
    }
    return x;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

static const char* kGapHeader =
    "n,k,rmin_log2_lo,rmin_log2_hi,witness_a,witness_b,"
    "proof_bound_log2,stated_bound_log2,corollary_bound_log2\n";

static std::string gap_csv_row(const MinGapResult& r) {
    std::string out;
    out += std::to_string(r.n) + ",";
    out += std::to_string(r.k) + ",";
    out += format_double(r.gap_log2_lo) + ",";
    out += format_double(r.gap_log2_hi) + ",";
    out += csv_quote(join_u64(r.witness_a)) + ",";
    out += csv_quote(join_u64(r.witness_b)) + ",";
    out += format_double(r.bound.proof_bound_log2) + ",";
    out += format_double(r.bound.stated_bound_log2) + ",";
    out += format_double(r.corollary_bound_log2) + "\n";
    return out;
}

std::string to_csv(const MinGapResult& r) { return kGapHeader + gap_csv_row(r); }

std::string to_csv(const std::vector<MinGapResult>& rows) {
    std::string out = kGapHeader;
    for (const auto& r : rows) out += gap_csv_row(r);
    return out;
}

std::string to_csv(const MarginScanReport& r) {
    std::string out = "lhs,rhs,observed_log2,proof_bound_log2,stated_bound_log2,m_used,margin\n";
    for (const auto& row : r.rows) {
        out += csv_quote(row.lhs) + ",";
        out += csv_quote(row.rhs) + ",";
        out += format_double(row.observed_log2) + ",";
        out += format_double(row.proof_bound_log2) + ",";
        out += format_double(row.stated_bound_log2) + ",";
        out += std::to_string(row.m_used) + ",";
        out += format_double(row.margin) + "\n";
    }
    return out;
}

}  // namespace sqrtcmp
