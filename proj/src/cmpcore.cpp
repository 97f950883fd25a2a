#include "sqrtcmp/cmpcore.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sqrtcmp {

namespace {

constexpr std::int64_t kMaxLiteral = std::numeric_limits<std::int64_t>::max();

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::uint64_t parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected an unsigned integer", pos);
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const unsigned d = static_cast<unsigned>(text[pos] - '0');
            if (v > (static_cast<std::uint64_t>(kMaxLiteral) - d) / 10)
                throw ParseError("integer literal exceeds the supported range (2^63 - 1)",
                                 start);
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }
};

}  // namespace

std::vector<RawTerm> parse_expr(std::string_view text) {
    Lexer lex{text};
    std::vector<RawTerm> terms;
    bool first = true;
    while (true) {
        std::int64_t sign = 1;
        if (first) {
            if (lex.at_end()) throw ParseError("empty expression", lex.pos);
        } else {
            if (lex.at_end()) break;
            if (lex.accept('+'))
                sign = 1;
            else if (lex.accept('-'))
                sign = -1;
            else
                throw ParseError("expected '+' or '-'", lex.pos);
        }
        first = false;

        // term := [uint '*'] 'sqrt' '(' uint ')' | uint
        std::int64_t coeff = 1;
        std::uint64_t radicand = 1;
        if (lex.accept_word("sqrt")) {
            lex.expect('(', "'(' after sqrt");
            radicand = lex.parse_uint();
            lex.expect(')', "')'");
        } else {
            const std::uint64_t u = lex.parse_uint();
            coeff = static_cast<std::int64_t>(u);
            if (lex.accept('*')) {
                if (!lex.accept_word("sqrt"))
                    throw ParseError("expected 'sqrt' after '*'", lex.pos);
                lex.expect('(', "'(' after sqrt");
                radicand = lex.parse_uint();
                lex.expect(')', "')'");
            }
        }
        terms.push_back({sign * coeff, radicand});
    }
    return terms;
}

SqrtSum SqrtSum::canonicalize(std::span<const RawTerm> raw) {
    std::map<std::uint64_t, mpz_class> merged;
    for (const RawTerm& t : raw) {
        if (t.coeff == 0 || t.radicand == 0) continue;
        const SquarefreePart sf = squarefree_decompose(t.radicand);
        merged[sf.radicand] += mpz_class(t.coeff) * sf.cofactor;
    }
    SqrtSum out;
    for (auto& [rad, coeff] : merged)
        if (coeff != 0) out.terms_.push_back({std::move(coeff), rad});
    return out;
}

SqrtSum SqrtSum::parse(std::string_view text) {
    const auto raw = parse_expr(text);
    return canonicalize(raw);
}

std::uint64_t SqrtSum::k_effective() const {
    std::uint64_t pos = 0, neg = 0;
    for (const auto& t : terms_) (t.coeff > 0 ? pos : neg) += 1;
    return std::max(pos, neg);
}

mpz_class SqrtSum::n_effective() const {
    mpz_class n = 1;
    for (const auto& t : terms_) {
        mpz_class v = t.coeff * t.coeff * t.radicand;
        if (v > n) n = v;
    }
    return n;
}

std::vector<std::uint64_t> SqrtSum::radicands() const {
    std::vector<std::uint64_t> out;
    for (const auto& t : terms_)
        if (t.radicand >= 2) out.push_back(t.radicand);
    return out;
}

SqrtSum SqrtSum::operator-() const {
    SqrtSum out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SqrtSum operator+(const SqrtSum& lhs, const SqrtSum& rhs) {
    // both inputs canonical: a sorted merge keeps the result canonical
    SqrtSum out;
    auto a = lhs.terms_.begin(), b = rhs.terms_.begin();
    while (a != lhs.terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != lhs.terms_.end() && a->radicand < b->radicand)) {
            out.terms_.push_back(*a++);
        } else if (a == lhs.terms_.end() || b->radicand < a->radicand) {
            out.terms_.push_back(*b++);
        } else {
            mpz_class c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back({std::move(c), a->radicand});
            ++a;
            ++b;
        }
    }
    return out;
}

SqrtSum operator-(const SqrtSum& lhs, const SqrtSum& rhs) { return lhs + (-rhs); }

std::string SqrtSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        const mpz_class mag = abs(t.coeff);
        if (out.empty()) {
            if (t.coeff < 0) out += "0-";  // stay within the grammar
        } else {
            out += (t.coeff < 0) ? "-" : "+";
        }
        if (t.radicand == 1) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += "sqrt(" + std::to_string(t.radicand) + ")";
        }
    }
    return out;
}

Interval eval_interval(const SqrtSum& s, mpfr_prec_t precision_bits) {
    Interval sum(precision_bits);
    for (const auto& t : s.terms()) {
        Interval term = Interval::sqrt_of(t.radicand, precision_bits);
        term.scale(t.coeff);
        sum += term;
    }
    return sum;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "Equal";
}

std::string to_string(CompareMethod m) {
    return m == CompareMethod::SyntacticEquality ? "syntactic-equality"
                                                 : "interval-separation";
}

CompareCertificate compare(const SqrtSum& lhs, const SqrtSum& rhs,
                           GeneratorPolicy policy) {
    CompareCertificate cert;
    if (sums_equal(lhs, rhs)) {
        cert.ordering = Ordering::Equal;
        cert.method = CompareMethod::SyntacticEquality;
        return cert;
    }

    const SqrtSum diff = lhs - rhs;  // nonzero by linear independence
    const auto rads = diff.radicands();
    const GeneratorChoice gen = choose_generators(rads, policy);
    const BoundReport bound =
        separation_bounds(diff.k_effective(), diff.n_effective(), gen.m, policy);
    const PrecisionCap cap = precision_cap(bound);

    cert.method = CompareMethod::IntervalSeparation;
    cert.bound = bound;

    for (std::uint64_t prec = 64;; prec *= 2) {
        const Interval enc = eval_interval(diff, static_cast<mpfr_prec_t>(prec));
        cert.precisions_tried.push_back(prec);
        cert.final_interval_log2_width = enc.log2_width();
        const int sgn = enc.sign();
        if (sgn != 0) {
            cert.ordering = sgn > 0 ? Ordering::Greater : Ordering::Less;
            return cert;
        }
        // An enclosure already narrower than the certified separation that
        // still straddles zero cannot happen for truly unequal sums.
        const bool past_cap = !cap.unbounded && prec >= cap.bits;
        if (past_cap && cert.final_interval_log2_width <= bound.stated_bound_log2)
            throw BoundViolationError(
                "interval of width 2^" + std::to_string(cert.final_interval_log2_width) +
                " straddles zero below the separation bound 2^" +
                std::to_string(bound.stated_bound_log2) +
                " for syntactically unequal sums");
    }
}

}  // namespace sqrtcmp
