#pragma once

// Dense univariate polynomials in x over ExactRational, plus the falling
// factorial families that every other module is built from.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "degbell/rational.hpp"

namespace degbell {

/// Coefficient i is the coefficient of x^i. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and two polynomials
/// are equal exactly when their coefficient vectors are.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<ExactRational> coeffs);
    explicit Poly(std::vector<ExactRational> coeffs);

    static Poly constant(const ExactRational& c);
    static Poly monomial(std::size_t power, const ExactRational& c = ExactRational(1));
    /// The polynomial x.
    static Poly x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^i; zero past the degree.
    ExactRational coeff(std::size_t i) const;
    std::span<const ExactRational> coefficients() const { return coeffs_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const ExactRational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const ExactRational& c) { return a *= c; }
    friend Poly operator*(const ExactRational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    /// Multiplies by x^k (shifts coefficients up).
    Poly shifted_up(std::size_t k = 1) const;

    /// "[c0, c1, ...]" using canonical rational strings.
    std::string to_string() const;

private:
    void trim();

    std::vector<ExactRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Horner evaluation.
ExactRational poly_eval(const Poly& p, const ExactRational& x0);
Poly poly_derivative(const Poly& p);
/// p(q(x)).
Poly poly_compose(const Poly& p, const Poly& q);

/// (x)_n = x(x-1)...(x-n+1); (x)_0 = 1.
Poly falling_factorial(unsigned n);

/// (x)_{n,lambda} = x(x-lambda)(x-2 lambda)...(x-(n-1)lambda); (x)_{0,lambda} = 1.
Poly degenerate_falling_factorial(unsigned n, const ExactRational& lambda);

/// (p)_{n,lambda} with the polynomial p substituted for x:
/// prod_{i<n} (p - i lambda).
Poly degenerate_falling_of(const Poly& p, unsigned n, const ExactRational& lambda);

/// (x0)_{n,lambda} as a scalar, by direct product.
ExactRational degenerate_falling_eval(const ExactRational& x0, unsigned n,
                                      const ExactRational& lambda);

/// Row n of Pascal's triangle, C(n,0..n), built additively.
std::vector<mpz_class> binomial_row(unsigned n);
ExactRational binomial(unsigned n, unsigned k);

}  // namespace degbell
