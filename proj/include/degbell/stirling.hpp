#pragma once

// Degenerate Stirling numbers of the second kind, their r-analogues, and
// the degenerate Bell / r-Bell polynomials assembled from them.

#include <memory>
#include <mutex>
#include <vector>

#include "degbell/poly.hpp"
#include "degbell/rational.hpp"

namespace degbell {

/// Memoized triangle of {n+r, k+r}_{r,lambda}, indexed by the offsets
/// (n, k), 0 <= k <= n. Rows are produced by
///
///   S(n+1, k) = S(n, k-1) + (k + r - n lambda) S(n, k),   S(0, 0) = 1,
///
/// which comes from (x+r)_{n+1,lambda} = (x+r)_{n,lambda} (x + r - n lambda)
/// and x (x)_k = (x)_{k+1} + k (x)_k. Growth is serialized by a mutex;
/// published rows are never modified.
class StirlingTriangle {
public:
    StirlingTriangle(ExactRational lambda, unsigned r);

    const ExactRational& lambda() const { return lambda_; }
    unsigned r() const { return r_; }

    /// Entry (n, k); zero for k > n.
    ExactRational entry(unsigned n, unsigned k) const;
    /// Row n, entries k = 0..n.
    std::vector<ExactRational> row(unsigned n) const;
    /// Number of rows computed so far.
    unsigned rows_computed() const;

private:
    void grow_to(unsigned n) const;

    ExactRational lambda_;
    unsigned r_;
    mutable std::mutex mutex_;
    mutable std::vector<std::shared_ptr<const std::vector<ExactRational>>> rows_;
};

/// Process-wide triangle for (lambda, r), created on first use.
std::shared_ptr<const StirlingTriangle> stirling_triangle(const ExactRational& lambda,
                                                          unsigned r);

/// {n k}_lambda.
ExactRational stirling2_degenerate(unsigned n, unsigned k, const ExactRational& lambda);

/// {n+r, k+r}_{r,lambda}.
ExactRational r_stirling2_degenerate(unsigned n, unsigned k, unsigned r,
                                     const ExactRational& lambda);

/// Row ({n+r, k+r}_{r,lambda})_{k=0..n} obtained by expanding the polynomial
/// (x+r)_{n,lambda} in the falling factorial basis by back-substitution.
/// Shares no code with the recurrence.
std::vector<ExactRational> stirling_via_basis_expansion(unsigned n, unsigned r,
                                                        const ExactRational& lambda);

/// phi_{n,lambda}(x) = sum_k {n k}_lambda x^k.
Poly bell_poly_degenerate(unsigned n, const ExactRational& lambda);

/// phi_{n,lambda} = phi_{n,lambda}(1).
ExactRational bell_number_degenerate(unsigned n, const ExactRational& lambda);

/// phi^{(r)}_{n,lambda}(x) = sum_k {n+r, k+r}_{r,lambda} x^k.
Poly rbell_poly_degenerate(unsigned n, unsigned r, const ExactRational& lambda);

inline constexpr unsigned kBruteForceBellLimit = 10;

/// Number of set partitions of an n-set, by enumerating restricted growth
/// strings. Exponential; throws std::out_of_range for n > 10.
ExactRational bell_number_classical_bruteforce(unsigned n);

}  // namespace degbell
