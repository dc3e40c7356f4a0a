#include "degbell/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "degbell/identities.hpp"
#include "degbell/operators.hpp"
#include "degbell/stirling.hpp"

namespace degbell::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<long> max_n;
    std::optional<long> max_m;
    std::optional<long> max_k;
    std::optional<long> r;
    std::vector<std::string> lambdas;
    std::string format;
    std::string identity = "spivey-bell";
    std::string out = "stdout";
    bool timing = false;
};

unsigned bound(const std::optional<long>& v, unsigned fallback, const char* flag) {
    if (!v) return fallback;
    if (*v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
    return static_cast<unsigned>(*v);
}

std::vector<ExactRational> parse_lambdas(const std::vector<std::string>& raw,
                                         std::vector<ExactRational> fallback) {
    if (raw.empty()) return fallback;
    std::vector<ExactRational> out;
    for (const auto& s : raw) {
        try {
            out.push_back(ExactRational::parse(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--lambda: ") + e.what());
        }
    }
    return out;
}

ExactRational single_lambda(const Options& o) {
    if (o.lambdas.size() > 1) throw UsageError("tables take exactly one --lambda");
    return parse_lambdas(o.lambdas, {ExactRational(0)}).front();
}

Json poly_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.to_string());
    return a;
}

std::string poly_csv(const Poly& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ';';
        s += p.coeff(i).to_string();
    }
    return s;
}

Json lambdas_json(const std::vector<ExactRational>& lambdas) {
    Json a = Json::array();
    for (const auto& l : lambdas) a.push_back(l.to_string());
    return a;
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

int emit_triangle(const Options& o, bool with_r, std::ostream& os) {
    const ExactRational lambda = single_lambda(o);
    const unsigned max_n = bound(o.max_n, 8, "--max-n");
    const unsigned max_k = bound(o.max_k, max_n, "--max-k");
    const unsigned r = with_r ? bound(o.r, 0, "--r") : 0;
    const auto triangle = stirling_triangle(lambda, r);
    const std::string format = o.format.empty() ? "csv" : o.format;

    if (format == "csv") {
        os << "n,k,value\n";
        for (unsigned n = 0; n <= max_n; ++n)
            for (unsigned k = 0; k <= std::min(n, max_k); ++k)
                os << n << ',' << k << ',' << triangle->entry(n, k) << '\n';
        return 0;
    }
    Json doc;
    doc["kind"] = with_r ? "rstirling" : "stirling";
    doc["parameters"] = {{"lambda", lambda.to_string()}, {"max_n", max_n}, {"max_k", max_k}};
    if (with_r) doc["parameters"]["r"] = r;
    Json records = Json::array();
    for (unsigned n = 0; n <= max_n; ++n)
        for (unsigned k = 0; k <= std::min(n, max_k); ++k)
            records.push_back({{"n", n}, {"k", k}, {"value", triangle->entry(n, k).to_string()}});
    doc["records"] = std::move(records);
    emit_json(os, doc);
    return 0;
}

int emit_bell(const Options& o, bool with_r, std::ostream& os) {
    const ExactRational lambda = single_lambda(o);
    const unsigned max_n = bound(o.max_n, 8, "--max-n");
    const unsigned r = with_r ? bound(o.r, 0, "--r") : 0;
    const std::string format = o.format.empty() ? "json" : o.format;
    const ExactRational one(1);

    if (format == "csv") {
        os << "n,value_at_1,coefficients\n";
        for (unsigned n = 0; n <= max_n; ++n) {
            const Poly p = rbell_poly_degenerate(n, r, lambda);
            os << n << ',' << poly_eval(p, one) << ',' << poly_csv(p) << '\n';
        }
        return 0;
    }
    Json doc;
    doc["kind"] = with_r ? "rbell" : "bell";
    doc["parameters"] = {{"lambda", lambda.to_string()}, {"max_n", max_n}};
    if (with_r) doc["parameters"]["r"] = r;
    Json records = Json::array();
    for (unsigned n = 0; n <= max_n; ++n) {
        const Poly p = rbell_poly_degenerate(n, r, lambda);
        records.push_back({{"n", n},
                           {"coefficients", poly_json(p)},
                           {"value_at_1", poly_eval(p, one).to_string()}});
    }
    doc["records"] = std::move(records);
    emit_json(os, doc);
    return 0;
}

Json report_record(const VerificationReport& report, bool timing) {
    Json rec;
    rec["identity"] = report.identity;
    rec["lambdas"] = lambdas_json(report.lambdas);
    rec["status"] = report.passed() ? "pass" : "fail";
    rec["checked"] = report.checked;
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json params = Json::object();
        for (const auto& [k, v] : f.params) params[k] = v;
        failures.push_back({{"params", params}, {"lhs", poly_json(f.lhs)}, {"rhs", poly_json(f.rhs)}});
    }
    rec["failures"] = std::move(failures);
    if (timing) rec["elapsed_seconds"] = report.elapsed.count();
    return rec;
}

int run_verify(const Options& o, std::ostream& os) {
    const auto lambdas = parse_lambdas(o.lambdas, default_lambdas());
    std::vector<VerificationReport> reports;
    Json parameters;
    parameters["identity"] = o.identity;

    if (o.identity == "spivey-bell" || o.identity == "spivey-rbell") {
        const bool rbell = o.identity == "spivey-rbell";
        SpiveyGrid grid;
        grid.max_m = bound(o.max_m, rbell ? 5 : 6, "--max-m");
        grid.max_n = bound(o.max_n, rbell ? 5 : 6, "--max-n");
        grid.max_r = bound(o.r, 3, "--r");
        parameters["max_m"] = grid.max_m;
        parameters["max_n"] = grid.max_n;
        if (rbell) parameters["max_r"] = grid.max_r;
        for (const auto& lambda : lambdas) {
            grid.lambdas = {lambda};
            reports.push_back(rbell ? verify_spivey_rbell(grid) : verify_spivey_bell(grid));
        }
    } else if (o.identity == "normal-order") {
        const unsigned max_n = bound(o.max_n, 8, "--max-n");
        const unsigned max_r = bound(o.r, 3, "--r");
        parameters["max_n"] = max_n;
        parameters["max_r"] = max_r;
        for (const auto& lambda : lambdas) reports.push_back(normal_order_suite(max_n, max_r, {lambda}));
    } else if (o.identity == "commutation") {
        const unsigned max_k = bound(o.max_k, 4, "--max-k");
        const unsigned max_m = bound(o.max_m, 6, "--max-m");
        parameters["max_k"] = max_k;
        parameters["max_m"] = max_m;
        for (const auto& lambda : lambdas) reports.push_back(commutation_checks(max_k, max_m, lambda));
    } else if (o.identity == "factorization") {
        const unsigned max_total = bound(o.max_n, 10, "--max-n");
        const unsigned max_m = bound(o.max_m, 4, "--max-m");
        parameters["max_n"] = max_total;
        parameters["max_m"] = max_m;
        for (const auto& lambda : lambdas)
            reports.push_back(factorization_check(max_total, max_m, lambda));
    } else {
        throw UsageError("unknown identity '" + o.identity + "'");
    }
    parameters["lambdas"] = lambdas_json(lambdas);
    return emit_reports("verify", std::move(parameters), reports, o.format, o.timing, os);
}

int run_oracle_check(const Options& o, std::ostream& os) {
    const auto lambdas = parse_lambdas(o.lambdas, default_lambdas());
    const unsigned max_n = bound(o.max_n, 14, "--max-n");
    const unsigned max_r = bound(o.r, 4, "--r");
    Json parameters{{"max_n", max_n}, {"max_r", max_r}, {"lambdas", lambdas_json(lambdas)}};
    std::vector<VerificationReport> reports;
    for (const auto& lambda : lambdas) {
        reports.push_back(triple_agreement_check(max_n, max_r, {lambda}));
        reports.push_back(rstirling_audit(max_n, max_r, {lambda}));
    }
    return emit_reports("oracle-check", std::move(parameters), reports, o.format, o.timing, os);
}

}  // namespace

int emit_reports(const std::string& kind, nlohmann::ordered_json parameters,
                 const std::vector<VerificationReport>& reports, const std::string& format_flag,
                 bool timing, std::ostream& os) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.passed();
    const std::string format = format_flag.empty() ? "json" : format_flag;
    if (format == "csv") {
        os << "identity,lambda,checked,failures,status\n";
        for (const auto& r : reports) {
            std::string lam;
            for (std::size_t i = 0; i < r.lambdas.size(); ++i)
                lam += (i ? ";" : "") + r.lambdas[i].to_string();
            os << r.identity << ',' << lam << ',' << r.checked << ',' << r.failures.size() << ','
               << (r.passed() ? "pass" : "fail") << '\n';
        }
    } else {
        Json doc;
        doc["kind"] = kind;
        doc["parameters"] = std::move(parameters);
        doc["status"] = pass ? "pass" : "fail";
        Json records = Json::array();
        for (const auto& r : reports) records.push_back(report_record(r, timing));
        doc["records"] = std::move(records);
        emit_json(os, doc);
    }
    return pass ? 0 : kExitFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerate Stirling numbers, Bell polynomials and Spivey-type identities"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&o](CLI::App* sub, bool tables) {
        sub->add_option("--max-n", o.max_n, "Largest n");
        sub->add_option("--lambda", o.lambdas, tables ? "lambda as p or p/q" : "lambda as p or p/q (repeatable)")
            ->take_all();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "Output path, or stdout");
    };

    auto* stirling = app.add_subcommand("stirling", "Degenerate Stirling triangle");
    add_common(stirling, true);
    stirling->add_option("--max-k", o.max_k, "Largest k");
    auto* rstirling = app.add_subcommand("rstirling", "Degenerate r-Stirling triangle");
    add_common(rstirling, true);
    rstirling->add_option("--max-k", o.max_k, "Largest k");
    rstirling->add_option("--r", o.r, "r");
    auto* bell = app.add_subcommand("bell", "Degenerate Bell polynomials");
    add_common(bell, true);
    auto* rbell = app.add_subcommand("rbell", "Degenerate r-Bell polynomials");
    add_common(rbell, true);
    rbell->add_option("--r", o.r, "r");
    auto* verify = app.add_subcommand("verify", "Verify an identity over a grid");
    add_common(verify, false);
    verify->add_option("--max-m", o.max_m, "Largest m");
    verify->add_option("--max-k", o.max_k, "Largest k");
    verify->add_option("--r", o.r, "Largest r");
    verify->add_option("--identity", o.identity, "Identity to check")
        ->check(CLI::IsMember({"spivey-bell", "spivey-rbell", "normal-order", "commutation",
                               "factorization"}));
    verify->add_flag("--timing", o.timing, "Include elapsed seconds in the report");
    auto* oracle = app.add_subcommand("oracle-check", "Cross-check the three constructions");
    add_common(oracle, false);
    oracle->add_option("--r", o.r, "Largest r");
    oracle->add_flag("--timing", o.timing, "Include elapsed seconds in the report");

    std::vector<std::string> argv_storage{"degbell"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::ofstream file;
        std::ostringstream buffer;
        int status = 0;
        if (stirling->parsed()) status = emit_triangle(o, false, buffer);
        else if (rstirling->parsed()) status = emit_triangle(o, true, buffer);
        else if (bell->parsed()) status = emit_bell(o, false, buffer);
        else if (rbell->parsed()) status = emit_bell(o, true, buffer);
        else if (verify->parsed()) status = run_verify(o, buffer);
        else status = run_oracle_check(o, buffer);

        if (o.out == "stdout") {
            out << buffer.str();
        } else {
            file.open(o.out, std::ios::binary);
            if (!file) throw UsageError("cannot open '" + o.out + "' for writing");
            file << buffer.str();
        }
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace degbell::cli
