#include <doctest.h>

#include <stdexcept>

#include "degbell/series.hpp"
#include "degbell/stirling.hpp"
#include "oracles.hpp"

using namespace degbell;
using degbell::testing::q;

namespace {

Poly c(long n, long d = 1) { return Poly::constant(q(n, d)); }

std::vector<ExactRational> sample_lambdas() { return {q(0), q(1), q(-1), q(1, 2), q(-2, 3)}; }

}  // namespace

TEST_CASE("series_mul") {
    const TruncatedSeries one_plus_t(2, {c(1), c(1)});
    const TruncatedSeries one_minus_t(2, {c(1), c(-1)});
    CHECK(series_mul(one_plus_t, one_minus_t) == TruncatedSeries(2, {c(1), c(0), c(-1)}));
    CHECK(series_mul(one_plus_t, TruncatedSeries::one(2)) == one_plus_t);
    const TruncatedSeries t(1, {c(0), c(1)});
    CHECK(series_mul(t, t) == TruncatedSeries(1));
    CHECK_THROWS_AS(series_mul(TruncatedSeries(2), TruncatedSeries(3)), std::invalid_argument);
}

TEST_CASE("series_exp") {
    CHECK(series_exp(TruncatedSeries(4)) == TruncatedSeries::one(4));
    CHECK(series_exp(TruncatedSeries(3, {c(0), c(1)})) ==
          TruncatedSeries(3, {c(1), c(1), c(1, 2), c(1, 6)}));
    CHECK(series_exp(TruncatedSeries(2, {Poly{}, Poly::x()})) ==
          TruncatedSeries(2, {c(1), Poly::x(), Poly::monomial(2, q(1, 2))}));
    CHECK_THROWS_AS(series_exp(TruncatedSeries(2, {c(1)})), std::domain_error);
}

TEST_CASE("series_exp turns sums into products") {
    degbell::testing::Generator gen(99);
    for (std::size_t order = 0; order <= 10; ++order) {
        std::vector<Poly> a(order + 1), b(order + 1);
        for (std::size_t i = 1; i <= order; ++i) {
            a[i] = gen.poly(2);
            b[i] = gen.poly(2);
        }
        const TruncatedSeries sa(order, a), sb(order, b);
        CHECK(series_exp(sa + sb) == series_mul(series_exp(sa), series_exp(sb)));
    }
}

TEST_CASE("degenerate_exp_series") {
    for (const auto& lambda : sample_lambdas())
        CHECK(degenerate_exp_series(c(1), lambda, 2) ==
              TruncatedSeries(2, {c(1), c(1), Poly::constant((q(1) - lambda) * q(1, 2))}));
    CHECK(degenerate_exp_series(Poly::x(), q(0), 2) ==
          TruncatedSeries(2, {c(1), Poly::x(), Poly::monomial(2, q(1, 2))}));
    CHECK(degenerate_exp_series(c(2), q(1), 2) == TruncatedSeries(2, {c(1), c(2), c(1)}));
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(degenerate_exp_series(Poly::x(), q(2, 3), 6).coeff(n) ==
              degenerate_falling_factorial(static_cast<unsigned>(n), q(2, 3)) *
                  (q(1) / factorial(static_cast<unsigned>(n))));
}

TEST_CASE("bell_polys_via_series") {
    for (const auto& lambda : sample_lambdas()) {
        const auto bells = bell_polys_via_series(4, lambda);
        REQUIRE(bells.size() == 5);
        CHECK(bells[0] == c(1));
        CHECK(bells[2] == (Poly{q(0), q(1) - lambda, q(1)}));
    }
    const auto classical = bell_polys_via_series(4, q(0));
    CHECK(poly_eval(classical[4], q(1)) == q(15));
    CHECK(poly_eval(classical[4], q(1)) == bell_number_classical_bruteforce(4));
}

TEST_CASE("rbell_polys_via_series") {
    for (const auto& lambda : sample_lambdas()) {
        CHECK(rbell_polys_via_series(6, 0, lambda) == bell_polys_via_series(6, lambda));
        CHECK(rbell_polys_via_series(1, 2, lambda)[1] == (Poly{q(2), q(1)}));
    }
    CHECK(rbell_polys_via_series(2, 1, q(1, 3))[2] == (Poly{q(2, 3), q(8, 3), q(1)}));
}

TEST_CASE("stirling_rows_via_series") {
    const auto k0 = stirling_rows_via_series(4, 0, 0, q(1, 2));
    CHECK(k0 == std::vector<ExactRational>{q(1), q(0), q(0), q(0), q(0)});
    for (const auto& lambda : sample_lambdas()) {
        CHECK(stirling_rows_via_series(2, 1, 0, lambda)[1] == q(1) - lambda);
        CHECK(stirling_rows_via_series(2, 2, 1, lambda)[0] == q(1));
    }
    CHECK_THROWS_AS(stirling_rows_via_series(1, 2, 0, q(0)), std::invalid_argument);
}

TEST_CASE("oracle agreement with the recurrence") {
    for (const auto& lambda : sample_lambdas()) {
        const auto bells = bell_polys_via_series(14, lambda);
        for (unsigned n = 0; n <= 14; ++n) CHECK(bells[n] == bell_poly_degenerate(n, lambda));
        for (unsigned r = 0; r <= 4; ++r) {
            const auto rbells = rbell_polys_via_series(14, r, lambda);
            for (unsigned n = 0; n <= 14; ++n) CHECK(rbells[n] == rbell_poly_degenerate(n, r, lambda));
            for (unsigned k = 0; k <= 14; ++k) {
                const auto column = stirling_rows_via_series(14, k, r, lambda);
                for (unsigned n = k; n <= 14; ++n)
                    CHECK(column[n - k] == r_stirling2_degenerate(n, k, r, lambda));
            }
        }
    }
}

TEST_CASE("truncation coherence") {
    const ExactRational lambda(-2, 3);
    const auto full = rbell_polys_via_series(10, 2, lambda);
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(rbell_polys_via_series(n, 2, lambda)[n] == full[n]);
        CHECK(bell_polys_via_series(n, lambda)[n] == bell_polys_via_series(10, lambda)[n]);
        CHECK(stirling_rows_via_series(n, 0, 1, lambda).back() ==
              stirling_rows_via_series(10, 0, 1, lambda)[n]);
    }
}
