#include <doctest.h>

#include "degbell/operators.hpp"
#include "degbell/series.hpp"
#include "degbell/stirling.hpp"
#include "oracles.hpp"

using namespace degbell;
using degbell::testing::q;

namespace {

std::vector<ExactRational> sample_lambdas() {
    return {q(0), q(1), q(-1), q(1, 2), q(-2, 3), q(3)};
}

const ExpWeightedPoly kExpX{Poly::constant(ExactRational(1))};

}  // namespace

TEST_CASE("apply_X") {
    CHECK(apply_X(Poly{q(1)}) == Poly::x());
    CHECK(apply_X(kExpX) == ExpWeightedPoly{Poly::x()});
    CHECK(apply_X(apply_X(Poly::x())) == Poly::monomial(3));
    CHECK(OperatorWord::X(2).apply(Poly::x()) == Poly::monomial(3));
}

TEST_CASE("apply_D") {
    CHECK(apply_D(Poly::monomial(2)) == Poly::monomial(1, q(2)));
    CHECK(apply_D(kExpX) == kExpX);
    CHECK(apply_D(ExpWeightedPoly{Poly::x()}) == ExpWeightedPoly{Poly{q(1), q(1)}});
}

TEST_CASE("apply_degenerate_operator_product") {
    const Poly v{q(3), q(-1), q(2, 7)};
    CHECK(apply_degenerate_operator_product(0, q(1, 2), q(0), v) == v);
    for (const auto& lambda : sample_lambdas()) {
        for (unsigned m = 0; m <= 6; ++m) {
            const Poly xm = Poly::monomial(m);
            CHECK(apply_degenerate_operator_product(2, lambda, q(0), xm) ==
                  xm * (q(m) * (q(m) - lambda)));
            for (unsigned r = 0; r <= 3; ++r)
                CHECK(apply_degenerate_operator_product(1, lambda, q(r), xm) == xm * q(m + r));
            // General n: eigenvalue (m + r)_{n,lambda}.
            for (unsigned n = 0; n <= 5; ++n)
                CHECK(apply_degenerate_operator_product(n, lambda, q(2), xm) ==
                      xm * degenerate_falling_eval(q(m + 2), n, lambda));
        }
        // Word and direct application agree.
        CHECK(OperatorWord::degenerate_product(4, lambda, q(1)).apply(v) ==
              apply_degenerate_operator_product(4, lambda, q(1), v));
        CHECK(OperatorWord::degenerate_product(4, lambda, q(1)).apply(kExpX) ==
              apply_degenerate_operator_product(4, lambda, q(1), kExpX));
    }
}

TEST_CASE("operator extraction of Bell polynomials") {
    CHECK(extract_bell_via_operators(0, q(1, 2)) == Poly{q(1)});
    CHECK(extract_bell_via_operators(1, q(1, 2)) == Poly::x());
    for (const auto& lambda : sample_lambdas()) {
        CHECK(extract_bell_via_operators(2, lambda) == (Poly{q(0), q(1) - lambda, q(1)}));
        CHECK(extract_bell_via_operators(2, lambda) == bell_poly_degenerate(2, lambda));
        CHECK(extract_rbell_via_operators(1, 2, lambda) == (Poly{q(2), q(1)}));
        CHECK(extract_rbell_via_operators(2, 1, lambda) == (Poly{q(1) - lambda, q(3) - lambda, q(1)}));
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(extract_rbell_via_operators(n, 0, lambda) == extract_bell_via_operators(n, lambda));
    }
}

TEST_CASE("operators, recurrence and series agree") {
    for (const auto& lambda : sample_lambdas())
        for (unsigned r = 0; r <= 4; ++r) {
            const auto series = rbell_polys_via_series(14, r, lambda);
            for (unsigned n = 0; n <= 14; ++n) {
                const Poly op = extract_rbell_via_operators(n, r, lambda);
                CHECK(op == rbell_poly_degenerate(n, r, lambda));
                CHECK(op == series[n]);
            }
        }
}

TEST_CASE("normal_order_check") {
    const auto n1 = normal_order_check(1, 0, q(1, 2), 4);
    CHECK(n1.passed());
    CHECK(n1.conclusive());
    CHECK(n1.residuals.size() == 5);

    // n=2, m=1: (1)(1-lambda) x against ({2,1} * 1 + {2,2} * 0) x.
    for (const auto& lambda : sample_lambdas()) {
        const Poly lhs = apply_degenerate_operator_product(2, lambda, q(0), Poly::x());
        CHECK(lhs == Poly::x() * (q(1) - lambda));
        CHECK(lhs == Poly::x() * (stirling2_degenerate(2, 1, lambda) * q(1) +
                                  stirling2_degenerate(2, 2, lambda) * q(0)));
        CHECK(normal_order_check(2, 0, lambda, 1).passed());
    }

    const auto n3 = normal_order_check(3, 2, q(1, 2), 5);
    CHECK(n3.passed());
    CHECK(n3.conclusive());
    CHECK_FALSE(normal_order_check(3, 2, q(1, 2), 2).conclusive());

    for (const auto& lambda : sample_lambdas())
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned r = 0; r <= 3; ++r) CHECK(normal_order_check(n, r, lambda, n).passed());
}

TEST_CASE("commutation identities") {
    // DX - XD = 1 on x^m.
    for (unsigned m = 0; m <= 5; ++m) {
        const Poly xm = Poly::monomial(m);
        CHECK(apply_D(apply_X(xm)) - apply_X(apply_D(xm)) == xm);
    }
    // (XD) x^5 = 5 x^5 = X^2 (XD + 2) x^3.
    const Poly lhs = apply_X(apply_D(Poly::monomial(5)));
    CHECK(lhs == Poly::monomial(5, q(5)));
    CHECK(lhs == (OperatorWord::X(2) * OperatorWord({AtomShiftedXD{q(2)}})).apply(Poly::monomial(3)));
    // (XD - s lambda)_{2,lambda} X = X (XD + 1 - s lambda)_{2,lambda}, s = 1, lambda = 1/2, on x^2.
    const ExactRational lambda(1, 2);
    const Poly x2 = Poly::monomial(2);
    CHECK((OperatorWord::degenerate_product(2, lambda, -lambda) * OperatorWord::X(1)).apply(x2) ==
          (OperatorWord::X(1) * OperatorWord::degenerate_product(2, lambda, q(1) - lambda)).apply(x2));

    for (const auto& l : sample_lambdas()) {
        const auto report = commutation_checks(3, 5, l);
        CHECK(report.passed());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("factorization of the degenerate product") {
    for (const auto& lambda : sample_lambdas()) {
        const auto report = factorization_check(10, 3, lambda);
        CHECK(report.passed());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("operators are linear") {
    degbell::testing::Generator gen(31);
    for (int i = 0; i < 60; ++i) {
        const Poly a = gen.poly(6), b = gen.poly(6);
        const auto c = gen.rational();
        const auto lambda = gen.rational(5);
        const auto shift = gen.rational(5);
        const unsigned n = gen.natural(4);
        const auto op = [&](const Poly& p) {
            return apply_degenerate_operator_product(n, lambda, shift, p);
        };
        CHECK(op(a + b) == op(a) + op(b));
        CHECK(op(a * c) == op(a) * c);
        CHECK(apply_X(a + b) == apply_X(a) + apply_X(b));
        CHECK(apply_D(a * c) == apply_D(a) * c);
        const auto ea = apply_degenerate_operator_product(n, lambda, shift, ExpWeightedPoly{a});
        const auto eb = apply_degenerate_operator_product(n, lambda, shift, ExpWeightedPoly{b});
        CHECK(apply_degenerate_operator_product(n, lambda, shift, ExpWeightedPoly{a + b}).factor ==
              ea.factor + eb.factor);
    }
}

TEST_CASE("normal order suite") {
    const auto report = normal_order_suite(8, 3, sample_lambdas());
    CHECK(report.passed());
    CHECK(report.identity == "normal-order");
}
