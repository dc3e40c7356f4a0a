#pragma once

// Right-hand sides of the Spivey-type recurrences for degenerate Bell and
// r-Bell polynomials, and grid verification of them against the direct
// constructions.

#include <vector>

#include "degbell/poly.hpp"
#include "degbell/report.hpp"

namespace degbell {

/// {0, 1, -1, 1/2, -2/3, 3}.
std::vector<ExactRational> default_lambdas();

/// sum_{j<=m} sum_{k<=n} C(n,k) {m j}_lambda (j - m lambda)_{n-k,lambda} x^j phi_{k,lambda}(x).
Poly spivey_rhs_bell(unsigned m, unsigned n, const ExactRational& lambda);

/// The scalar recurrence at x = 1, built from the numbers phi_{k,lambda}.
ExactRational spivey_rhs_bell_number(unsigned m, unsigned n, const ExactRational& lambda);

/// Individual summands of spivey_rhs_bell in (j, k) lexicographic order.
std::vector<Poly> spivey_terms_bell(unsigned m, unsigned n, const ExactRational& lambda);

/// The classical summands C(n,k) {m j} j^{n-k} x^j phi_k(x), same order.
std::vector<Poly> classical_spivey_terms(unsigned m, unsigned n);

/// sum_{k<=m} sum_{l<=n} C(n,l) {m+r, k+r}_{r,lambda} (k - m lambda)_{n-l,lambda}
///     x^k phi^{(r)}_{l,lambda}(x).
Poly spivey_rhs_rbell(unsigned m, unsigned n, unsigned r, const ExactRational& lambda);

/// The lambda = 0 form with k^{n-l} in place of the degenerate factorial.
Poly classical_spivey_rhs_rbell(unsigned m, unsigned n, unsigned r);

struct SpiveyGrid {
    unsigned max_m = 6;
    unsigned max_n = 6;
    unsigned max_r = 3;
    std::vector<ExactRational> lambdas = default_lambdas();
};

/// Checks spivey_rhs_bell(m, n) == phi_{m+n,lambda}(x) and the x = 1 scalar
/// instance at every grid point; at lambda = 0 also compares the summands
/// with the classical ones.
VerificationReport verify_spivey_bell(const SpiveyGrid& grid);

/// Checks spivey_rhs_rbell(m, n, r) == phi^{(r)}_{m+n,lambda}(x) and the
/// x = 1 instance; at lambda = 0 also the classical k^{n-l} form.
VerificationReport verify_spivey_rbell(const SpiveyGrid& grid);

/// Recurrence, generating function and operator constructions of
/// phi^{(r)}_{n,lambda}(x) agree for n <= max_n, r <= max_r.
VerificationReport triple_agreement_check(unsigned max_n, unsigned max_r,
                                          const std::vector<ExactRational>& lambdas);

/// The r-Stirling recurrence against the basis expansion and the
/// generating-function rows, n <= max_n, k <= n, r <= max_r.
VerificationReport rstirling_audit(unsigned max_n, unsigned max_r,
                                   const std::vector<ExactRational>& lambdas);

}  // namespace degbell
