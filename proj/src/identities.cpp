#include "degbell/identities.hpp"

#include <string>

#include "degbell/operators.hpp"
#include "degbell/series.hpp"
#include "degbell/stirling.hpp"

namespace degbell {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long v) { return std::to_string(v); }

ExactRational pow_int(long base, unsigned e) {
    ExactRational acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= ExactRational(base);
    return acc;
}

using Clock = std::chrono::steady_clock;

}  // namespace

std::vector<ExactRational> default_lambdas() {
    return {ExactRational(0), ExactRational(1), ExactRational(-1),
            ExactRational(1, 2), ExactRational(-2, 3), ExactRational(3)};
}

std::vector<Poly> spivey_terms_bell(unsigned m, unsigned n, const ExactRational& lambda) {
    const auto binom = binomial_row(n);
    const ExactRational m_lambda = ExactRational(static_cast<long>(m)) * lambda;
    std::vector<Poly> terms;
    for (unsigned j = 0; j <= m; ++j) {
        const ExactRational s = stirling2_degenerate(m, j, lambda);
        for (unsigned k = 0; k <= n; ++k) {
            const ExactRational c =
                ExactRational(binom[k]) * s *
                degenerate_falling_eval(ExactRational(static_cast<long>(j)) - m_lambda, n - k, lambda);
            terms.push_back(bell_poly_degenerate(k, lambda).shifted_up(j) * c);
        }
    }
    return terms;
}

Poly spivey_rhs_bell(unsigned m, unsigned n, const ExactRational& lambda) {
    Poly sum;
    for (const auto& t : spivey_terms_bell(m, n, lambda)) sum += t;
    return sum;
}

ExactRational spivey_rhs_bell_number(unsigned m, unsigned n, const ExactRational& lambda) {
    const auto binom = binomial_row(n);
    const ExactRational m_lambda = ExactRational(static_cast<long>(m)) * lambda;
    ExactRational sum;
    for (unsigned j = 0; j <= m; ++j)
        for (unsigned k = 0; k <= n; ++k)
            sum += ExactRational(binom[k]) * stirling2_degenerate(m, j, lambda) *
                   degenerate_falling_eval(ExactRational(static_cast<long>(j)) - m_lambda, n - k,
                                           lambda) *
                   bell_number_degenerate(k, lambda);
    return sum;
}

std::vector<Poly> classical_spivey_terms(unsigned m, unsigned n) {
    const auto binom = binomial_row(n);
    const ExactRational zero;
    std::vector<Poly> terms;
    for (unsigned j = 0; j <= m; ++j)
        for (unsigned k = 0; k <= n; ++k)
            terms.push_back(bell_poly_degenerate(k, zero).shifted_up(j) *
                            (ExactRational(binom[k]) * stirling2_degenerate(m, j, zero) *
                             pow_int(j, n - k)));
    return terms;
}

Poly spivey_rhs_rbell(unsigned m, unsigned n, unsigned r, const ExactRational& lambda) {
    const auto binom = binomial_row(n);
    const ExactRational m_lambda = ExactRational(static_cast<long>(m)) * lambda;
    Poly sum;
    for (unsigned k = 0; k <= m; ++k) {
        const ExactRational s = r_stirling2_degenerate(m, k, r, lambda);
        for (unsigned l = 0; l <= n; ++l) {
            const ExactRational c =
                ExactRational(binom[l]) * s *
                degenerate_falling_eval(ExactRational(static_cast<long>(k)) - m_lambda, n - l, lambda);
            sum += rbell_poly_degenerate(l, r, lambda).shifted_up(k) * c;
        }
    }
    return sum;
}

Poly classical_spivey_rhs_rbell(unsigned m, unsigned n, unsigned r) {
    const auto binom = binomial_row(n);
    const ExactRational zero;
    Poly sum;
    for (unsigned k = 0; k <= m; ++k)
        for (unsigned l = 0; l <= n; ++l)
            sum += rbell_poly_degenerate(l, r, zero).shifted_up(k) *
                   (ExactRational(binom[l]) * r_stirling2_degenerate(m, k, r, zero) *
                    pow_int(k, n - l));
    return sum;
}

VerificationReport verify_spivey_bell(const SpiveyGrid& grid) {
    VerificationReport report;
    report.identity = "spivey-bell";
    report.bounds = {{"max_m", grid.max_m}, {"max_n", grid.max_n}};
    report.lambdas = grid.lambdas;
    const auto start = Clock::now();
    for (const auto& lambda : grid.lambdas) {
        const std::string lam = lambda.to_string();
        for (unsigned m = 0; m <= grid.max_m; ++m) {
            for (unsigned n = 0; n <= grid.max_n; ++n) {
                const Poly lhs = bell_poly_degenerate(m + n, lambda);
                const Poly rhs = spivey_rhs_bell(m, n, lambda);
                report.expect_equal({{"form", "polynomial"}, {"lambda", lam}, {"m", str(m)}, {"n", str(n)}},
                                    lhs, rhs);
                report.expect_equal({{"form", "x=1"}, {"lambda", lam}, {"m", str(m)}, {"n", str(n)}},
                                    Poly::constant(bell_number_degenerate(m + n, lambda)),
                                    Poly::constant(spivey_rhs_bell_number(m, n, lambda)));
                if (lambda.is_zero()) {
                    const auto degenerate = spivey_terms_bell(m, n, lambda);
                    const auto classical = classical_spivey_terms(m, n);
                    for (std::size_t i = 0; i < degenerate.size(); ++i)
                        report.expect_equal({{"form", "classical term"},
                                             {"lambda", lam},
                                             {"m", str(m)},
                                             {"n", str(n)},
                                             {"j", str(static_cast<long>(i / (n + 1)))},
                                             {"k", str(static_cast<long>(i % (n + 1)))}},
                                            degenerate[i], classical[i]);
                }
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

VerificationReport verify_spivey_rbell(const SpiveyGrid& grid) {
    VerificationReport report;
    report.identity = "spivey-rbell";
    report.bounds = {{"max_m", grid.max_m}, {"max_n", grid.max_n}, {"max_r", grid.max_r}};
    report.lambdas = grid.lambdas;
    const auto start = Clock::now();
    const ExactRational one(1);
    for (const auto& lambda : grid.lambdas) {
        const std::string lam = lambda.to_string();
        for (unsigned r = 0; r <= grid.max_r; ++r) {
            for (unsigned m = 0; m <= grid.max_m; ++m) {
                for (unsigned n = 0; n <= grid.max_n; ++n) {
                    const Params p{{"lambda", lam}, {"r", str(r)}, {"m", str(m)}, {"n", str(n)}};
                    const Poly lhs = rbell_poly_degenerate(m + n, r, lambda);
                    const Poly rhs = spivey_rhs_rbell(m, n, r, lambda);
                    Params poly_params{{"form", "polynomial"}};
                    poly_params.insert(poly_params.end(), p.begin(), p.end());
                    report.expect_equal(poly_params, lhs, rhs);
                    Params x1_params{{"form", "x=1"}};
                    x1_params.insert(x1_params.end(), p.begin(), p.end());
                    report.expect_equal(x1_params, Poly::constant(poly_eval(lhs, one)),
                                        Poly::constant(poly_eval(rhs, one)));
                    if (lambda.is_zero()) {
                        Params classical_params{{"form", "classical"}};
                        classical_params.insert(classical_params.end(), p.begin(), p.end());
                        report.expect_equal(classical_params, lhs, classical_spivey_rhs_rbell(m, n, r));
                    }
                }
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

VerificationReport triple_agreement_check(unsigned max_n, unsigned max_r,
                                          const std::vector<ExactRational>& lambdas) {
    VerificationReport report;
    report.identity = "triple-agreement";
    report.bounds = {{"max_n", max_n}, {"max_r", max_r}};
    report.lambdas = lambdas;
    const auto start = Clock::now();
    for (const auto& lambda : lambdas) {
        const std::string lam = lambda.to_string();
        const auto bell_series = bell_polys_via_series(max_n, lambda);
        for (unsigned n = 0; n <= max_n; ++n) {
            const Poly recurrence = bell_poly_degenerate(n, lambda);
            report.expect_equal({{"route", "series"}, {"lambda", lam}, {"r", "bell"}, {"n", str(n)}},
                                recurrence, bell_series[n]);
            report.expect_equal({{"route", "operators"}, {"lambda", lam}, {"r", "bell"}, {"n", str(n)}},
                                recurrence, extract_bell_via_operators(n, lambda));
        }
        for (unsigned r = 0; r <= max_r; ++r) {
            const auto rbell_series = rbell_polys_via_series(max_n, r, lambda);
            for (unsigned n = 0; n <= max_n; ++n) {
                const Poly recurrence = rbell_poly_degenerate(n, r, lambda);
                report.expect_equal({{"route", "series"}, {"lambda", lam}, {"r", str(r)}, {"n", str(n)}},
                                    recurrence, rbell_series[n]);
                report.expect_equal({{"route", "operators"}, {"lambda", lam}, {"r", str(r)}, {"n", str(n)}},
                                    recurrence, extract_rbell_via_operators(n, r, lambda));
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

VerificationReport rstirling_audit(unsigned max_n, unsigned max_r,
                                   const std::vector<ExactRational>& lambdas) {
    VerificationReport report;
    report.identity = "rstirling-audit";
    report.bounds = {{"max_n", max_n}, {"max_r", max_r}};
    report.lambdas = lambdas;
    const auto start = Clock::now();
    for (const auto& lambda : lambdas) {
        const std::string lam = lambda.to_string();
        for (unsigned r = 0; r <= max_r; ++r) {
            std::vector<std::vector<ExactRational>> series_columns;
            for (unsigned k = 0; k <= max_n; ++k)
                series_columns.push_back(stirling_rows_via_series(max_n, k, r, lambda));
            for (unsigned n = 0; n <= max_n; ++n) {
                const auto basis = stirling_via_basis_expansion(n, r, lambda);
                for (unsigned k = 0; k <= n; ++k) {
                    const Poly recurrence = Poly::constant(r_stirling2_degenerate(n, k, r, lambda));
                    report.expect_equal({{"route", "basis"}, {"lambda", lam}, {"r", str(r)},
                                         {"n", str(n)}, {"k", str(k)}},
                                        recurrence, Poly::constant(basis[k]));
                    report.expect_equal({{"route", "series"}, {"lambda", lam}, {"r", str(r)},
                                         {"n", str(n)}, {"k", str(k)}},
                                        recurrence, Poly::constant(series_columns[k][n - k]));
                }
            }
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

}  // namespace degbell
