// Acceptance gate. Every criterion is exact equality over rationals; the
// runtime limits are wall-clock seconds.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "degbell/cli.hpp"
#include "degbell/identities.hpp"
#include "degbell/operators.hpp"
#include "degbell/stirling.hpp"

using namespace degbell;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_seconds;  // <= 0 means no limit
    std::function<Outcome()> body;
};

std::string summarize(const std::vector<VerificationReport>& reports) {
    std::size_t checked = 0, failed = 0;
    for (const auto& r : reports) {
        checked += r.checked;
        failed += r.failures.size();
    }
    std::ostringstream os;
    os << checked << " comparisons, " << failed << " failures";
    for (const auto& r : reports)
        if (!r.passed()) {
            const auto& f = r.failures.front();
            os << "; first failure in " << r.identity << ":";
            for (const auto& [k, v] : f.params) os << ' ' << k << '=' << v;
            os << " lhs=" << f.lhs << " rhs=" << f.rhs;
            break;
        }
    return os.str();
}

Outcome from_reports(const std::vector<VerificationReport>& reports) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.passed() && r.checked > 0;
    return {pass, summarize(reports)};
}

struct Captured {
    int status;
    std::string out;
};

Captured run_binary(const std::string& args) {
    const std::string cmd = std::string(DEGBELL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome spivey_bell_recurrence() {
    SpiveyGrid grid;
    grid.max_m = 6;
    grid.max_n = 6;
    grid.lambdas = default_lambdas();
    auto report = verify_spivey_bell(grid);
    // The polynomial equality itself, independent of the report plumbing.
    for (const auto& lambda : grid.lambdas)
        for (unsigned m = 0; m <= 6; ++m)
            for (unsigned n = 0; n <= 6; ++n)
                report.expect_equal({{"direct", "1"}}, spivey_rhs_bell(m, n, lambda),
                                    bell_poly_degenerate(m + n, lambda));
    return from_reports({report});
}

Outcome spivey_rbell_recurrence() {
    SpiveyGrid grid;
    grid.max_m = 5;
    grid.max_n = 5;
    grid.max_r = 3;
    grid.lambdas = default_lambdas();
    return from_reports({verify_spivey_rbell(grid)});
}

Outcome classical_spivey() {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    const ExactRational zero, one(1);
    std::size_t checked = 0;
    std::ostringstream bad;
    for (unsigned total = 0; total <= 8; ++total) {
        const ExactRational brute = bell_number_classical_bruteforce(total);
        if (brute != ExactRational(bell[total])) bad << " brute(" << total << ")=" << brute;
        for (unsigned m = 0; m <= total; ++m) {
            const unsigned n = total - m;
            ++checked;
            const ExactRational degenerate = spivey_rhs_bell_number(m, n, zero);
            ExactRational classical;
            for (const auto& term : classical_spivey_terms(m, n)) classical += poly_eval(term, one);
            const ExactRational rbell_form = poly_eval(classical_spivey_rhs_rbell(m, n, 0), one);
            if (degenerate != brute || classical != brute || rbell_form != brute)
                bad << " (m=" << m << ",n=" << n << ")";
        }
    }
    const std::string failures = bad.str();
    return {failures.empty(), std::to_string(checked) + " splits of n <= 8" +
                                  (failures.empty() ? "" : "; mismatches:" + failures)};
}

Outcome triple_agreement() {
    return from_reports({triple_agreement_check(14, 4, default_lambdas())});
}

Outcome normal_ordering() {
    std::vector<VerificationReport> reports{normal_order_suite(8, 3, default_lambdas())};
    for (const auto& lambda : default_lambdas()) {
        reports.push_back(commutation_checks(4, 6, lambda));
        reports.push_back(factorization_check(10, 4, lambda));
    }
    // Each per-(n, r) check is conclusive because m_max = n.
    for (const auto& lambda : default_lambdas())
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned r = 0; r <= 3; ++r) {
                const auto check = normal_order_check(n, r, lambda, n);
                if (!check.passed() || !check.conclusive())
                    return {false, "normal_order_check failed at n=" + std::to_string(n) +
                                       " r=" + std::to_string(r) + " lambda=" + lambda.to_string()};
            }
    return from_reports(reports);
}

Outcome rstirling() { return from_reports({rstirling_audit(14, 4, default_lambdas())}); }

Outcome cli_determinism() {
    const std::vector<std::string> commands{
        "stirling --max-n 10 --lambda 1/2 --format csv",
        "rstirling --max-n 8 --r 3 --lambda -2/3 --format json",
        "bell --max-n 9 --lambda 3",
        "rbell --max-n 9 --r 2 --lambda -1 --format csv",
        "verify --identity spivey-bell --max-m 4 --max-n 4 --lambda 0 --lambda 1/2",
        "verify --identity spivey-rbell --max-m 3 --max-n 3 --r 2",
        "verify --identity normal-order --max-n 5",
        "oracle-check --max-n 8 --r 2",
    };
    std::ostringstream bad;
    for (const auto& c : commands) {
        const auto first = run_binary(c);
        const auto second = run_binary(c);
        if (first.out.empty() || first.out != second.out || first.status != second.status)
            bad << " [" << c << "]";
        if (c.rfind("verify", 0) == 0 || c.rfind("oracle-check", 0) == 0) {
            const auto doc = nlohmann::json::parse(first.out, nullptr, false);
            bool no_failures = !doc.is_discarded();
            if (no_failures)
                for (const auto& rec : doc["records"]) no_failures = no_failures && rec["failures"].empty();
            if ((first.status == 0) != no_failures) bad << " status-mismatch[" << c << "]";
        }
    }
    // A report with failures must map to a nonzero status.
    VerificationReport failing;
    failing.identity = "synthetic";
    failing.expect_equal({{"n", "0"}}, Poly{ExactRational(1)}, Poly{ExactRational(2)});
    std::ostringstream sink;
    if (cli::emit_reports("verify", nlohmann::ordered_json::object(), {failing}, "json", false, sink) == 0)
        bad << " failing-report-exit-0";
    if (run_binary("bell --lambda 0.5").status == 0) bad << " malformed-lambda-accepted";
    const std::string failures = bad.str();
    return {failures.empty(), std::to_string(commands.size()) + " commands run twice" +
                                  (failures.empty() ? "" : "; problems:" + failures)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Spivey-type recurrence for degenerate Bell polynomials, m,n<=6", 10, spivey_bell_recurrence},
        {"AC2", "Spivey-type recurrence for degenerate r-Bell polynomials, m,n<=5, r<=3", 30, spivey_rbell_recurrence},
        {"AC3", "Classical Spivey recovery at lambda=0 against brute-force Bell numbers, n<=8", 0,
         classical_spivey},
        {"AC4", "Recurrence / generating function / operator agreement, n<=14, r<=4", 60, triple_agreement},
        {"AC5", "Normal ordering and commutation/factorization identities", 0, normal_ordering},
        {"AC6", "r-Stirling recurrence vs basis expansion vs series, n<=14, r<=4", 0, rstirling},
        {"AC7", "CLI byte determinism and verify exit status", 0, cli_determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
            outcome.pass = false;
            outcome.detail += "; exceeded " + std::to_string(c.time_limit_seconds) + " s";
        }
        if (!outcome.pass) ++failed;
        std::printf("[%s] %s %s (%.3f s) -- %s\n", outcome.pass ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), seconds, outcome.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
