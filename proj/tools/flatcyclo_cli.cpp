// flatcyclo: stream, verify and measure the ternary cyclotomic polynomials
// Phi_{p1 p2 p3} with p2 = 1 (mod p1) and p3 = 1 (mod p1 p2).
//
// Exit codes: 0 success, 2 invalid input or family violation, 3 resource limit.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flatcyclo/flatcyclo.hpp"

using namespace flatcyclo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TooLarge:
        case ErrorKind::SearchExhausted:
        case ErrorKind::Overflow:
            return kExitResource;
        default:
            return kExitInvalid;
    }
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt parse_arg(const std::string& text, const char* name) {
    auto v = parse_decimal(text);
    if (!v) throw UsageError(std::string(name) + ": expected a nonnegative decimal integer, got '" + text + "'");
    return *v;
}

PrimeTriple parse_triple(const std::vector<std::string>& args) {
    return PrimeTriple(parse_arg(args.at(0), "p1"), parse_arg(args.at(1), "p2"), parse_arg(args.at(2), "p3"));
}

std::string approx(const mpq_class& q, int digits) {
    mpf_class f(q, 64 + 4 * static_cast<mp_bitcnt_t>(digits));
    std::vector<char> buf(64 + static_cast<std::size_t>(digits));
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
    return buf.data();
}

std::string format_fraction(const Fraction& f, int digits) {
    return to_decimal(f.num) + "/" + to_decimal(f.den) + " ≈ " + approx(f.value(), digits);
}

// Buffered writer; flushes every `batch` lines so --limit and closed pipes
// are noticed promptly.
class LineSink {
   public:
    explicit LineSink(std::size_t batch) : batch_(batch) {}
    ~LineSink() { flush(); }

    bool line(const std::string& s) {
        buf_ += s;
        buf_ += '\n';
        if (++pending_ >= batch_) return flush();
        return ok_;
    }
    bool flush() {
        if (ok_ && !buf_.empty()) ok_ = std::fwrite(buf_.data(), 1, buf_.size(), stdout) == buf_.size();
        if (ok_) ok_ = std::fflush(stdout) == 0;
        buf_.clear();
        pending_ = 0;
        return ok_;
    }

   private:
    std::size_t batch_;
    std::size_t pending_ = 0;
    std::string buf_;
    bool ok_ = true;
};

int cmd_terms(const std::vector<std::string>& args, const std::string& format, long long limit) {
    TernaryTermStream stream(parse_triple(args));
    const bool csv = format == "csv";
    LineSink out(4096);
    if (csv) out.line("exponent,coeff");
    std::uint64_t written = 0;
    while (auto term = stream.next()) {
        if (limit >= 0 && written == static_cast<std::uint64_t>(limit)) {
            out.line(csv ? "# truncated after " + std::to_string(written) + " terms"
                         : "{\"truncated\":true,\"emitted\":" + std::to_string(written) + "}");
            break;
        }
        const std::string e = to_decimal(term->exponent);
        const std::string c = term->coeff > 0 ? "1" : "-1";
        if (!out.line(csv ? e + "," + c : "{\"e\":\"" + e + "\",\"c\":" + c + "}")) return kExitOk;  // reader went away
        ++written;
    }
    out.flush();
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& args, std::size_t budget) {
    const PrimeTriple t = parse_triple(args);
    if (t.product() > from_u64(budget) || !t.enumerable())
        throw Error(ErrorKind::TooLarge, "p1*p2*p3 = " + to_decimal(t.product()) + " exceeds the dense budget of " +
                                             std::to_string(budget) +
                                             "; use `hw`, `density` or `coeff`, which work at any size");

    bool all = true;
    auto report = [&](bool pass, const std::string& name, const std::string& detail) {
        all = all && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    };
    std::cout << "PASS family: p2 = 1 mod p1 and p3 = 1 mod p1*p2\n";

    std::vector<Term> terms;
    for (const Term& term : TernaryTermStream(t)) terms.push_back(term);

    bool ascending = true;
    bool flat = true;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k > 0 && !(terms[k - 1].exponent < terms[k].exponent)) ascending = false;
        if (terms[k].coeff != 1 && terms[k].coeff != -1) flat = false;
    }
    report(ascending, "strict-ascent", "exponents strictly increase over " + std::to_string(terms.size()) + " terms");
    report(flat, "flatness", "every emitted coefficient is +1 or -1");

    const DensePoly oracle = cyclotomic_dense(FactoredInt::factor(t.product()), budget);
    bool equal = false;
    if (ascending && flat) equal = dense_from_sparse(SparsePoly(terms), t.totient(), budget) == oracle;
    report(equal, "oracle-equivalence", "stream equals Phi_" + to_decimal(t.product()) + " computed by exact division");

    const BigInt hw = hw_ternary(t);
    report(from_u64(terms.size()) == hw, "weight", std::to_string(terms.size()) + " terms, closed form " + to_decimal(hw));
    report(!terms.empty() && terms.back().exponent == degree(t), "degree",
           "last exponent " + (terms.empty() ? std::string("-") : to_decimal(terms.back().exponent)) + ", phi " +
               to_decimal(degree(t)));

    // Block lemma: the oracle route depends on (i1, i2, i3) only; compare it
    // against the closed form at every i4.
    const BlockLemmaOracle lemma(t, budget);
    const auto p1 = to_u64(t.p1()), q2 = to_u64(t.q2()), q3 = to_u64(t.q3());
    std::uint64_t blocks = 0, mismatches = 0;
    for (std::uint64_t i1 = 0; i1 + 2 <= p1; ++i1)
        for (std::uint64_t i2 = 0; i2 < q2; ++i2)
            for (std::uint64_t i3 = 0; i3 < p1; ++i3) {
                const SparsePoly expected = lemma.block({i1, i2, i3, 0});
                for (std::uint64_t i4 = 0; i4 < q3; ++i4, ++blocks)
                    if (!(block_f({i1, i2, i3, i4}, t) == expected)) ++mismatches;
            }
    report(mismatches == 0, "block-lemma",
           std::to_string(blocks - mismatches) + "/" + std::to_string(blocks) + " blocks match -Psi*T_{u+1}(Phi_{p1p2})");

    std::cout << "terms: " << terms.size() << "\n";
    return all ? kExitOk : 1;
}

int cmd_hw(const std::vector<std::string>& args) {
    std::cout << to_decimal(hw_ternary(parse_triple(args))) << "\n";
    return kExitOk;
}

int cmd_density(const std::vector<std::string>& args, int digits, bool asymptote) {
    const Density d = density(parse_triple(args));
    std::cout << format_fraction(d.exact, digits) << "\n";
    if (asymptote) std::cout << "asymptote " << format_fraction(d.asymptote, digits) << "\n";
    return kExitOk;
}

int cmd_search(const std::string& p1_text, std::uint64_t cap, int digits) {
    const BigInt p1 = parse_arg(p1_text, "p1");
    const SearchOptions opts{cap};
    const BigInt p2 = next_p2(p1, opts);
    const BigInt p3 = next_p3(p1, p2, opts);
    const PrimeTriple t(p1, p2, p3);
    std::cout << "p1=" << to_decimal(p1) << "\n"
              << "p2=" << to_decimal(p2) << "\n"
              << "p3=" << to_decimal(p3) << "\n"
              << "hw=" << to_decimal(hw_ternary(t)) << "\n"
              << "density=" << format_fraction(density(t).exact, digits) << "\n";
    return kExitOk;
}

int cmd_coeff(const std::vector<std::string>& args, const std::string& e_text) {
    const PrimeTriple t = parse_triple(args);
    std::cout << coefficient_at(t, parse_arg(e_text, "e")) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit ternary cyclotomic polynomials for p2 = 1 mod p1, p3 = 1 mod p1*p2"};
    app.require_subcommand(1);

    std::vector<std::string> triple;
    auto add_triple = [&](CLI::App* sub) { sub->add_option("triple", triple, "the primes p1 p2 p3")->expected(3)->required(); };

    std::string format = "jsonl";
    long long limit = -1;
    auto* terms = app.add_subcommand("terms", "stream the terms in ascending order");
    add_triple(terms);
    terms->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    terms->add_option("--limit", limit, "stop after N terms")->check(CLI::NonNegativeNumber);

    std::size_t budget = kDefaultDenseBudget;
    auto* verify = app.add_subcommand("verify", "check the stream against the division oracle");
    add_triple(verify);
    verify->add_option("--budget", budget, "dense coefficient budget");

    auto* hw = app.add_subcommand("hw", "exact number of nonzero terms");
    add_triple(hw);

    int digits = 4;
    bool asymptote = false;
    auto* dens = app.add_subcommand("density", "hw / degree as an exact fraction");
    add_triple(dens);
    dens->add_option("--digits", digits, "significant digits of the approximation")->check(CLI::Range(1, 200));
    dens->add_flag("--asymptote", asymptote, "also print 2/(3 p2)");

    std::string p1_text;
    std::uint64_t cap = SearchOptions{}.max_candidates;
    auto* search = app.add_subcommand("search", "smallest family triple above p1");
    search->add_option("p1", p1_text, "odd prime")->required();
    search->add_option("--cap", cap, "candidates tried per search");
    search->add_option("--digits", digits, "significant digits of the density")->check(CLI::Range(1, 200));

    std::vector<std::string> coeff_args;
    auto* coeff = app.add_subcommand("coeff", "coefficient of x^e");
    coeff->add_option("args", coeff_args, "p1 p2 p3 e")->expected(4)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (terms->parsed()) return cmd_terms(triple, format, limit);
        if (verify->parsed()) return cmd_verify(triple, budget);
        if (hw->parsed()) return cmd_hw(triple);
        if (dens->parsed()) return cmd_density(triple, digits, asymptote);
        if (search->parsed()) return cmd_search(p1_text, cap, digits);
        if (coeff->parsed()) return cmd_coeff(coeff_args, coeff_args.at(3));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kExitInvalid;
}
