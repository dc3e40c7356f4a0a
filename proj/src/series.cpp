#include "degbell/series.hpp"

#include <stdexcept>
#include <string>

namespace degbell {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

// Multiplies each coefficient of t^n by n!, turning EGF coefficients into values.
std::vector<Poly> egf_values(const TruncatedSeries& s) {
    std::vector<Poly> out;
    out.reserve(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n)
        out.push_back(s.coeff(n) * factorial(static_cast<unsigned>(n)));
    return out;
}

const Poly kZeroPoly{};

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Poly> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Poly::constant(ExactRational(1));
    return s;
}

const Poly& TruncatedSeries::coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : kZeroPoly;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Poly& c) {
    for (auto& p : coeffs_) p = p * c;
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    std::vector<Poly> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a.coeff(i) * b.coeff(j);
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k) {
    TruncatedSeries acc = TruncatedSeries::one(a.order());
    for (unsigned i = 0; i < k; ++i) acc = series_mul(acc, a);
    return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must be zero");
    // E' = a' E  gives  (n+1) E_{n+1} = sum_{j=0}^{n} (j+1) a_{j+1} E_{n-j}.
    const std::size_t order = a.order();
    std::vector<Poly> e(order + 1);
    e[0] = Poly::constant(ExactRational(1));
    for (std::size_t n = 0; n < order; ++n) {
        Poly acc;
        for (std::size_t j = 0; j <= n; ++j) {
            const Poly& aj = a.coeff(j + 1);
            if (aj.is_zero()) continue;
            acc += (aj * e[n - j]) * ExactRational(static_cast<long>(j + 1));
        }
        e[n + 1] = acc * (ExactRational(1) / ExactRational(static_cast<long>(n + 1)));
    }
    return TruncatedSeries(order, std::move(e));
}

TruncatedSeries degenerate_exp_series(const Poly& exponent, const ExactRational& lambda,
                                      std::size_t order) {
    std::vector<Poly> c(order + 1);
    Poly falling = Poly::constant(ExactRational(1));
    ExactRational inv_factorial(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            const ExactRational step = ExactRational(static_cast<long>(n - 1)) * lambda;
            falling = falling * (exponent - Poly::constant(step));
            inv_factorial /= ExactRational(static_cast<long>(n));
        }
        c[n] = falling * inv_factorial;
    }
    return TruncatedSeries(order, std::move(c));
}

std::vector<Poly> bell_polys_via_series(unsigned n_max, const ExactRational& lambda) {
    TruncatedSeries inner = degenerate_exp_series(Poly::constant(ExactRational(1)), lambda, n_max) -
                            TruncatedSeries::one(n_max);
    inner *= Poly::x();
    return egf_values(series_exp(inner));
}

std::vector<Poly> rbell_polys_via_series(unsigned n_max, unsigned r, const ExactRational& lambda) {
    TruncatedSeries inner = degenerate_exp_series(Poly::constant(ExactRational(1)), lambda, n_max) -
                            TruncatedSeries::one(n_max);
    inner *= Poly::x();
    const TruncatedSeries shift =
        degenerate_exp_series(Poly::constant(ExactRational(static_cast<long>(r))), lambda, n_max);
    return egf_values(series_mul(series_exp(inner), shift));
}

std::vector<ExactRational> stirling_rows_via_series(unsigned n_max, unsigned k, unsigned r,
                                                    const ExactRational& lambda) {
    if (n_max < k)
        throw std::invalid_argument("stirling_rows_via_series: n_max (" + std::to_string(n_max) +
                                    ") < k (" + std::to_string(k) + ")");
    const TruncatedSeries base =
        degenerate_exp_series(Poly::constant(ExactRational(1)), lambda, n_max) -
        TruncatedSeries::one(n_max);
    TruncatedSeries s = series_mul(
        series_pow(base, k),
        degenerate_exp_series(Poly::constant(ExactRational(static_cast<long>(r))), lambda, n_max));
    s *= Poly::constant(ExactRational(1) / factorial(k));
    const auto values = egf_values(s);
    std::vector<ExactRational> out;
    out.reserve(n_max - k + 1);
    for (unsigned n = k; n <= n_max; ++n) {
        const Poly& v = values[n];
        if (v.degree() > 0) throw std::logic_error("stirling_rows_via_series: non-constant coefficient");
        out.push_back(v.coeff(0));
    }
    return out;
}

}  // namespace degbell
