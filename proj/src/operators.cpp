#include "degbell/operators.hpp"

#include <algorithm>
#include <string>

#include "degbell/stirling.hpp"

namespace degbell {

namespace {

std::string str(long v) { return std::to_string(v); }

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

template <class V>
V apply_word(const std::vector<OperatorAtom>& atoms, V v) {
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        v = std::visit(Overloaded{
                           [&](AtomX) { return apply_X(v); },
                           [&](AtomD) { return apply_D(v); },
                           [&](const AtomShiftedXD& a) {
                               V out = apply_X(apply_D(v));
                               V scaled = v;
                               scaled *= a.shift;
                               out += scaled;
                               return out;
                           },
                       },
                       *it);
    }
    return v;
}

// sum_k {n+r, k+r}_{r,lambda} X^k D^k
OperatorSum normal_form(const StirlingTriangle& triangle, unsigned n) {
    OperatorSum sum;
    for (unsigned k = 0; k <= n; ++k)
        sum.add(triangle.entry(n, k), OperatorWord::X(k) * OperatorWord::D(k));
    return sum;
}

}  // namespace

Poly apply_X(const Poly& v) { return v.shifted_up(1); }

ExpWeightedPoly apply_X(const ExpWeightedPoly& v) { return {v.factor.shifted_up(1)}; }

Poly apply_D(const Poly& v) { return poly_derivative(v); }

ExpWeightedPoly apply_D(const ExpWeightedPoly& v) { return {poly_derivative(v.factor) + v.factor}; }

OperatorWord OperatorWord::X(unsigned power) {
    return OperatorWord(std::vector<OperatorAtom>(power, AtomX{}));
}

OperatorWord OperatorWord::D(unsigned power) {
    return OperatorWord(std::vector<OperatorAtom>(power, AtomD{}));
}

OperatorWord OperatorWord::degenerate_product(unsigned n, const ExactRational& lambda,
                                              const ExactRational& shift) {
    std::vector<OperatorAtom> atoms;
    atoms.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        atoms.emplace_back(AtomShiftedXD{shift - ExactRational(static_cast<long>(i)) * lambda});
    return OperatorWord(std::move(atoms));
}

Poly OperatorWord::apply(Poly v) const { return apply_word(atoms_, std::move(v)); }

ExpWeightedPoly OperatorWord::apply(ExpWeightedPoly v) const {
    return apply_word(atoms_, std::move(v));
}

OperatorWord operator*(const OperatorWord& a, const OperatorWord& b) {
    std::vector<OperatorAtom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    return OperatorWord(std::move(atoms));
}

void OperatorSum::add(const ExactRational& coeff, OperatorWord word) {
    if (!coeff.is_zero()) terms_.emplace_back(coeff, std::move(word));
}

Poly OperatorSum::apply(const Poly& v) const {
    Poly out;
    for (const auto& [c, w] : terms_) out += w.apply(v) * c;
    return out;
}

ExpWeightedPoly OperatorSum::apply(const ExpWeightedPoly& v) const {
    ExpWeightedPoly out;
    for (const auto& [c, w] : terms_) {
        ExpWeightedPoly term = w.apply(v);
        term *= c;
        out += term;
    }
    return out;
}

Poly extract_bell_via_operators(unsigned n, const ExactRational& lambda) {
    return extract_rbell_via_operators(n, 0, lambda);
}

Poly extract_rbell_via_operators(unsigned n, unsigned r, const ExactRational& lambda) {
    const ExpWeightedPoly e_x{Poly::constant(ExactRational(1))};
    return apply_degenerate_operator_product(n, lambda, ExactRational(static_cast<long>(r)), e_x)
        .factor;
}

bool MonomialCheck::passed() const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [](const Poly& p) { return p.is_zero(); });
}

MonomialCheck normal_order_check(unsigned n, unsigned r, const ExactRational& lambda,
                                 unsigned m_max) {
    const OperatorSum rhs = normal_form(*stirling_triangle(lambda, r), n);
    MonomialCheck check;
    check.degree_bound = n;
    check.m_max = m_max;
    for (unsigned m = 0; m <= m_max; ++m) {
        const Poly xm = Poly::monomial(m);
        const Poly lhs = apply_degenerate_operator_product(
            n, lambda, ExactRational(static_cast<long>(r)), xm);
        check.residuals.push_back(lhs - rhs.apply(xm));
    }
    return check;
}

VerificationReport normal_order_suite(unsigned max_n, unsigned max_r,
                                      const std::vector<ExactRational>& lambdas) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "normal-order";
    report.bounds = {{"max_n", max_n}, {"max_r", max_r}};
    report.lambdas = lambdas;
    for (const auto& lambda : lambdas) {
        for (unsigned r = 0; r <= max_r; ++r) {
            const auto triangle = stirling_triangle(lambda, r);
            for (unsigned n = 0; n <= max_n; ++n) {
                const OperatorSum rhs = normal_form(*triangle, n);
                const OperatorWord product = OperatorWord::degenerate_product(
                    n, lambda, ExactRational(static_cast<long>(r)));
                for (unsigned m = 0; m <= n; ++m) {
                    const Poly xm = Poly::monomial(m);
                    report.expect_equal({{"lambda", lambda.to_string()},
                                         {"r", str(r)},
                                         {"n", str(n)},
                                         {"m", str(m)}},
                                        product.apply(xm), rhs.apply(xm));
                }
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport commutation_checks(unsigned k_max, unsigned m_max, const ExactRational& lambda) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "commutation";
    report.bounds = {{"max_k", k_max}, {"max_m", m_max}};
    report.lambdas = {lambda};
    const std::string lam = lambda.to_string();
    const auto X = [](unsigned k) { return OperatorWord::X(k); };
    const auto D = [](unsigned k) { return OperatorWord::D(k); };
    const auto XD = [](const ExactRational& shift) {
        return OperatorWord({AtomShiftedXD{shift}});
    };
    const auto L = [](long v) { return ExactRational(v); };

    for (unsigned p = 0; p <= m_max; ++p) {
        const Poly xp = Poly::monomial(p);
        for (unsigned k = 1; k <= k_max; ++k) {
            // DX^k - X^k D = k X^{k-1}
            report.expect_equal({{"eq", "DX^k-X^kD"}, {"lambda", lam}, {"k", str(k)}, {"p", str(p)}},
                                (D(1) * X(k)).apply(xp) - (X(k) * D(1)).apply(xp),
                                X(k - 1).apply(xp) * L(k));
            // (XD) X^k = X^k (XD + k)
            report.expect_equal({{"eq", "(XD)X^k"}, {"lambda", lam}, {"k", str(k)}, {"p", str(p)}},
                                (XD(L(0)) * X(k)).apply(xp), (X(k) * XD(L(k))).apply(xp));
        }
        for (unsigned j = 0; j <= k_max; ++j) {
            for (unsigned n = 0; n <= kCommutationMaxDegree; ++n) {
                const auto binom = binomial_row(n);
                for (unsigned s = 0; s <= kCommutationMaxShiftIndex; ++s) {
                    const ExactRational s_lambda = L(s) * lambda;
                    const ExactRational j_shift = L(j) - s_lambda;
                    const Poly lhs =
                        (OperatorWord::degenerate_product(n, lambda, -s_lambda) * X(j)).apply(xp);
                    const Poly moved =
                        (X(j) * OperatorWord::degenerate_product(n, lambda, j_shift)).apply(xp);
                    OperatorSum expanded;
                    for (unsigned k = 0; k <= n; ++k)
                        expanded.add(ExactRational(binom[k]) *
                                         degenerate_falling_eval(j_shift, n - k, lambda),
                                     X(j) * OperatorWord::degenerate_product(k, lambda, L(0)));
                    std::vector<std::pair<std::string, std::string>> params{
                        {"eq", "(XD-s*lambda)_n X^j"}, {"lambda", lam}, {"j", str(j)},
                        {"n", str(n)}, {"s", str(s)}, {"p", str(p)}};
                    report.expect_equal(params, lhs, moved);
                    params[0].second = "(XD-s*lambda)_n X^j binomial";
                    report.expect_equal(params, lhs, expanded.apply(xp));

                    for (unsigned r = 0; r <= kCommutationMaxR; ++r) {
                        const ExactRational r_shift = L(r) - s_lambda;
                        const Poly lhs_r =
                            (OperatorWord::degenerate_product(n, lambda, r_shift) * X(j)).apply(xp);
                        const Poly moved_r =
                            (X(j) * OperatorWord::degenerate_product(n, lambda, r_shift + L(j)))
                                .apply(xp);
                        OperatorSum expanded_r;
                        for (unsigned l = 0; l <= n; ++l)
                            expanded_r.add(ExactRational(binom[l]) *
                                               degenerate_falling_eval(j_shift, n - l, lambda),
                                           X(j) * OperatorWord::degenerate_product(l, lambda, L(r)));
                        std::vector<std::pair<std::string, std::string>> params_r{
                            {"eq", "(XD+r-s*lambda)_n X^k"}, {"lambda", lam}, {"k", str(j)},
                            {"n", str(n)}, {"s", str(s)}, {"r", str(r)}, {"p", str(p)}};
                        report.expect_equal(params_r, lhs_r, moved_r);
                        params_r[0].second = "(XD+r-s*lambda)_n X^k binomial";
                        report.expect_equal(params_r, lhs_r, expanded_r.apply(xp));
                    }
                }
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport factorization_check(unsigned max_total, unsigned m_max,
                                       const ExactRational& lambda) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.identity = "factorization";
    report.bounds = {{"max_total", max_total}, {"max_m", m_max}};
    report.lambdas = {lambda};
    const std::string lam = lambda.to_string();
    const ExactRational zero;
    const ExpWeightedPoly e_x{Poly::constant(ExactRational(1))};
    for (unsigned total = 0; total <= max_total; ++total) {
        const OperatorWord whole = OperatorWord::degenerate_product(total, lambda, zero);
        for (unsigned m = 0; m <= total; ++m) {
            const unsigned n = total - m;
            const OperatorWord head = OperatorWord::degenerate_product(m, lambda, zero);
            const OperatorWord tail = OperatorWord::degenerate_product(
                n, lambda, -(ExactRational(static_cast<long>(m)) * lambda));
            const Poly target = whole.apply(e_x).factor;
            report.expect_equal({{"eq", "head*tail on e^x"}, {"lambda", lam}, {"m", str(m)}, {"n", str(n)}},
                                target, (head * tail).apply(e_x).factor);
            report.expect_equal({{"eq", "tail*head on e^x"}, {"lambda", lam}, {"m", str(m)}, {"n", str(n)}},
                                target, (tail * head).apply(e_x).factor);
            for (unsigned p = 0; p <= m_max; ++p) {
                const Poly xp = Poly::monomial(p);
                const Poly mono = whole.apply(xp);
                report.expect_equal({{"eq", "head*tail on x^p"}, {"lambda", lam}, {"m", str(m)},
                                     {"n", str(n)}, {"p", str(p)}},
                                    mono, (head * tail).apply(xp));
                report.expect_equal({{"eq", "tail*head on x^p"}, {"lambda", lam}, {"m", str(m)},
                                     {"n", str(n)}, {"p", str(p)}},
                                    mono, (tail * head).apply(xp));
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace degbell
