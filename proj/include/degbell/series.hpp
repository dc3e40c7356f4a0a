#pragma once

// Truncated formal power series in t with polynomial-in-x coefficients,
// used to read every number family off its generating function.

#include <cstddef>
#include <vector>

#include "degbell/poly.hpp"

namespace degbell {

/// Coefficients of t^0..t^N. Arithmetic drops every term beyond t^N.
class TruncatedSeries {
public:
    /// The zero series of order N.
    explicit TruncatedSeries(std::size_t order);
    /// Pads or truncates coeffs to length order + 1.
    TruncatedSeries(std::size_t order, std::vector<Poly> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    /// Coefficient of t^n; zero for n > order.
    const Poly& coeff(std::size_t n) const;
    const std::vector<Poly>& coefficients() const { return coeffs_; }

    /// Throws std::invalid_argument if the orders differ.
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Poly& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Poly& c) { return a *= c; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Poly> coeffs_;
};

/// Cauchy product truncated at the common order. Throws std::invalid_argument
/// on an order mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^k by repeated multiplication; a^0 = 1.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k);

/// exp(a) for a with zero constant term. Throws std::domain_error otherwise.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// sum_{n<=N} (exponent)_{n,lambda} t^n / n!, i.e. e_lambda^{exponent}(t).
TruncatedSeries degenerate_exp_series(const Poly& exponent, const ExactRational& lambda,
                                      std::size_t order);

/// phi_{n,lambda}(x), n = 0..n_max, from exp(x (e_lambda(t) - 1)).
std::vector<Poly> bell_polys_via_series(unsigned n_max, const ExactRational& lambda);

/// phi^{(r)}_{n,lambda}(x), n = 0..n_max, from exp(x (e_lambda(t) - 1)) e_lambda^r(t).
std::vector<Poly> rbell_polys_via_series(unsigned n_max, unsigned r, const ExactRational& lambda);

/// {n+r, k+r}_{r,lambda} for n = k..n_max, from (e_lambda(t) - 1)^k / k! * e_lambda^r(t).
/// Throws std::invalid_argument when n_max < k.
std::vector<ExactRational> stirling_rows_via_series(unsigned n_max, unsigned k, unsigned r,
                                                    const ExactRational& lambda);

}  // namespace degbell
