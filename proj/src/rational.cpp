#include "degbell/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace degbell {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

ExactRational::ExactRational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("ExactRational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::domain_error("ExactRational: zero denominator");
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "': expected an integer or p/q");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "': zero denominator");
    if (negative) n = -n;
    return ExactRational(mpq_class(n, d));
}

std::string ExactRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    value_ += o.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
    value_ -= o.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
    value_ *= o.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    value_ /= o.value_;
    return *this;
}

ExactRational ExactRational::operator-() const {
    ExactRational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) {
    return os << q.to_string();
}

ExactRational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ExactRational(f);
}

}  // namespace degbell
