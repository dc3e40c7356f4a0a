#include "degbell/poly.hpp"

#include <algorithm>
#include <ostream>

namespace degbell {

Poly::Poly(std::initializer_list<ExactRational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const ExactRational& c) { return Poly(std::vector<ExactRational>{c}); }

Poly Poly::monomial(std::size_t power, const ExactRational& c) {
    std::vector<ExactRational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactRational Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactRational{};
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const ExactRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

Poly Poly::shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<ExactRational> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

std::string Poly::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ", ";
        s += coeffs_[i].to_string();
    }
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

ExactRational poly_eval(const Poly& p, const ExactRational& x0) {
    ExactRational acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Poly poly_derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<ExactRational> v(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        v[i - 1] = p.coeff(i) * ExactRational(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly poly_compose(const Poly& p, const Poly& q) {
    Poly acc;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * q;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly falling_factorial(unsigned n) { return degenerate_falling_factorial(n, ExactRational(1)); }

Poly degenerate_falling_factorial(unsigned n, const ExactRational& lambda) {
    return degenerate_falling_of(Poly::x(), n, lambda);
}

Poly degenerate_falling_of(const Poly& p, unsigned n, const ExactRational& lambda) {
    Poly acc = Poly::constant(ExactRational(1));
    for (unsigned i = 0; i < n; ++i)
        acc = acc * (p - Poly::constant(ExactRational(static_cast<long>(i)) * lambda));
    return acc;
}

ExactRational degenerate_falling_eval(const ExactRational& x0, unsigned n,
                                      const ExactRational& lambda) {
    ExactRational acc(1);
    ExactRational factor = x0;
    for (unsigned i = 0; i < n; ++i) {
        acc *= factor;
        factor -= lambda;
    }
    return acc;
}

std::vector<mpz_class> binomial_row(unsigned n) {
    std::vector<mpz_class> row{1};
    row.reserve(n + 1);
    for (unsigned i = 1; i <= n; ++i) {
        row.push_back(1);
        for (unsigned j = i - 1; j > 0; --j) row[j] += row[j - 1];
    }
    return row;
}

ExactRational binomial(unsigned n, unsigned k) {
    if (k > n) return {};
    return ExactRational(binomial_row(n)[k]);
}

}  // namespace degbell
