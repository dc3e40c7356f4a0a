#pragma once

// Exact rational scalars. Every value is kept in canonical form: the
// numerator and denominator are coprime and the denominator is positive.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degbell {

class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
    ExactRational(long numerator, long denominator);
    explicit ExactRational(const mpz_class& integer) : value_(integer) {}
    explicit ExactRational(mpq_class value);

    /// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
    /// Throws std::invalid_argument on anything else, including decimals.
    static ExactRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Canonical form: "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    /// Throws std::domain_error on division by zero.
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

/// n! as an exact integer.
ExactRational factorial(unsigned n);

}  // namespace degbell
