#include "degbell/stirling.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace degbell {

StirlingTriangle::StirlingTriangle(ExactRational lambda, unsigned r)
    : lambda_(std::move(lambda)), r_(r) {
    rows_.push_back(std::make_shared<const std::vector<ExactRational>>(
        std::vector<ExactRational>{ExactRational(1)}));
}

void StirlingTriangle::grow_to(unsigned n) const {
    std::lock_guard lock(mutex_);
    const ExactRational r(static_cast<long>(r_));
    while (rows_.size() <= n) {
        const unsigned prev_n = static_cast<unsigned>(rows_.size() - 1);
        const auto& prev = *rows_.back();
        const ExactRational shift = r - ExactRational(static_cast<long>(prev_n)) * lambda_;
        std::vector<ExactRational> next(prev_n + 2);
        for (unsigned k = 0; k <= prev_n + 1; ++k) {
            ExactRational v;
            if (k >= 1) v += prev[k - 1];
            if (k <= prev_n) v += (ExactRational(static_cast<long>(k)) + shift) * prev[k];
            next[k] = std::move(v);
        }
        rows_.push_back(std::make_shared<const std::vector<ExactRational>>(std::move(next)));
    }
}

ExactRational StirlingTriangle::entry(unsigned n, unsigned k) const {
    if (k > n) return {};
    grow_to(n);
    std::lock_guard lock(mutex_);
    return (*rows_[n])[k];
}

std::vector<ExactRational> StirlingTriangle::row(unsigned n) const {
    grow_to(n);
    std::lock_guard lock(mutex_);
    return *rows_[n];
}

unsigned StirlingTriangle::rows_computed() const {
    std::lock_guard lock(mutex_);
    return static_cast<unsigned>(rows_.size());
}

std::shared_ptr<const StirlingTriangle> stirling_triangle(const ExactRational& lambda,
                                                          unsigned r) {
    static std::mutex cache_mutex;
    static std::map<std::pair<std::string, unsigned>, std::shared_ptr<const StirlingTriangle>>
        cache;
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[{lambda.to_string(), r}];
    if (!slot) slot = std::make_shared<const StirlingTriangle>(lambda, r);
    return slot;
}

ExactRational stirling2_degenerate(unsigned n, unsigned k, const ExactRational& lambda) {
    return stirling_triangle(lambda, 0)->entry(n, k);
}

ExactRational r_stirling2_degenerate(unsigned n, unsigned k, unsigned r,
                                     const ExactRational& lambda) {
    return stirling_triangle(lambda, r)->entry(n, k);
}

std::vector<ExactRational> stirling_via_basis_expansion(unsigned n, unsigned r,
                                                        const ExactRational& lambda) {
    const Poly shifted_x{ExactRational(static_cast<long>(r)), ExactRational(1)};
    Poly residual = degenerate_falling_of(shifted_x, n, lambda);
    std::vector<ExactRational> row(n + 1);
    // (x)_k is monic of degree k, so the coefficient of x^k in what remains
    // is exactly the coordinate on (x)_k.
    for (unsigned k = n + 1; k-- > 0;) {
        row[k] = residual.coeff(k);
        if (!row[k].is_zero()) residual -= falling_factorial(k) * row[k];
    }
    if (!residual.is_zero())
        throw std::logic_error("stirling_via_basis_expansion: nonzero remainder");
    return row;
}

Poly bell_poly_degenerate(unsigned n, const ExactRational& lambda) {
    return rbell_poly_degenerate(n, 0, lambda);
}

ExactRational bell_number_degenerate(unsigned n, const ExactRational& lambda) {
    return poly_eval(bell_poly_degenerate(n, lambda), ExactRational(1));
}

Poly rbell_poly_degenerate(unsigned n, unsigned r, const ExactRational& lambda) {
    return Poly(stirling_triangle(lambda, r)->row(n));
}

ExactRational bell_number_classical_bruteforce(unsigned n) {
    if (n > kBruteForceBellLimit)
        throw std::out_of_range("bell_number_classical_bruteforce: n = " + std::to_string(n) +
                                " exceeds the enumeration limit of " +
                                std::to_string(kBruteForceBellLimit));
    if (n == 0) return ExactRational(1);
    // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
    std::vector<unsigned> a(n, 0);
    std::vector<unsigned> prefix_max(n, 0);
    long count = 0;
    while (true) {
        ++count;
        unsigned i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (unsigned j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return ExactRational(count);
}

}  // namespace degbell
