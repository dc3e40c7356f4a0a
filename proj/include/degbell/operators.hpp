#pragma once

// The operators X (multiplication by x) and D (d/dx), DX - XD = 1, acting
// on polynomials and on f(x) e^x. Operators are applied by structural
// recursion on the operand; they are never expanded into matrices.

#include <variant>
#include <vector>

#include "degbell/poly.hpp"
#include "degbell/report.hpp"

namespace degbell {

/// f(x) e^x, stored as f. Equality is equality of the factors.
struct ExpWeightedPoly {
    Poly factor;

    ExpWeightedPoly& operator+=(const ExpWeightedPoly& o) {
        factor += o.factor;
        return *this;
    }
    ExpWeightedPoly& operator*=(const ExactRational& c) {
        factor *= c;
        return *this;
    }
    friend bool operator==(const ExpWeightedPoly&, const ExpWeightedPoly&) = default;
};

Poly apply_X(const Poly& v);
ExpWeightedPoly apply_X(const ExpWeightedPoly& v);
Poly apply_D(const Poly& v);
/// D(f e^x) = (f' + f) e^x.
ExpWeightedPoly apply_D(const ExpWeightedPoly& v);

/// Applies (XD + shift - i lambda) for i = n-1 down to 0. With shift = 0 this
/// is (XD)_{n,lambda}; with shift = r it is (XD + r)_{n,lambda}.
template <class V>
V apply_degenerate_operator_product(unsigned n, const ExactRational& lambda,
                                    const ExactRational& shift, V v) {
    for (unsigned i = n; i-- > 0;) {
        const ExactRational c = shift - ExactRational(static_cast<long>(i)) * lambda;
        V next = apply_X(apply_D(v));
        v *= c;
        next += v;
        v = std::move(next);
    }
    return v;
}

struct AtomX {};
struct AtomD {};
/// XD + shift.
struct AtomShiftedXD {
    ExactRational shift;
};
using OperatorAtom = std::variant<AtomX, AtomD, AtomShiftedXD>;

/// A product of atoms written left to right; applied right to left.
class OperatorWord {
public:
    OperatorWord() = default;
    explicit OperatorWord(std::vector<OperatorAtom> atoms) : atoms_(std::move(atoms)) {}

    static OperatorWord X(unsigned power = 1);
    static OperatorWord D(unsigned power = 1);
    /// (XD + shift)(XD + shift - lambda)...(XD + shift - (n-1) lambda).
    static OperatorWord degenerate_product(unsigned n, const ExactRational& lambda,
                                           const ExactRational& shift);

    const std::vector<OperatorAtom>& atoms() const { return atoms_; }

    Poly apply(Poly v) const;
    ExpWeightedPoly apply(ExpWeightedPoly v) const;

    /// Composition: (a * b) applies b first.
    friend OperatorWord operator*(const OperatorWord& a, const OperatorWord& b);

private:
    std::vector<OperatorAtom> atoms_;
};

/// A finite linear combination of words.
class OperatorSum {
public:
    void add(const ExactRational& coeff, OperatorWord word);
    Poly apply(const Poly& v) const;
    ExpWeightedPoly apply(const ExpWeightedPoly& v) const;

private:
    std::vector<std::pair<ExactRational, OperatorWord>> terms_;
};

/// phi_{n,lambda}(x), read off as the factor of (XD)_{n,lambda} e^x.
Poly extract_bell_via_operators(unsigned n, const ExactRational& lambda);

/// phi^{(r)}_{n,lambda}(x), read off as the factor of (XD + r)_{n,lambda} e^x.
Poly extract_rbell_via_operators(unsigned n, unsigned r, const ExactRational& lambda);

/// Per-monomial comparison of two degree-preserving operators. On x^m both
/// sides give c(m) x^m with c a polynomial in m of degree at most
/// degree_bound, so agreement for m = 0..degree_bound proves the operators
/// equal.
struct MonomialCheck {
    unsigned degree_bound = 0;
    unsigned m_max = 0;
    /// residuals[m] = (LHS - RHS) x^m.
    std::vector<Poly> residuals;

    bool passed() const;
    bool conclusive() const { return m_max >= degree_bound; }
};

/// (XD + r)_{n,lambda} against sum_k {n+r, k+r}_{r,lambda} X^k D^k on
/// x^0..x^{m_max}.
MonomialCheck normal_order_check(unsigned n, unsigned r, const ExactRational& lambda,
                                 unsigned m_max);

/// Normal ordering over n <= max_n, r <= max_r, m_max = n, for every lambda.
VerificationReport normal_order_suite(unsigned max_n, unsigned max_r,
                                      const std::vector<ExactRational>& lambdas);

inline constexpr unsigned kCommutationMaxDegree = 4;
inline constexpr unsigned kCommutationMaxShiftIndex = 3;
inline constexpr unsigned kCommutationMaxR = 3;

/// Checks on monomials x^0..x^{m_max}:
///   DX^k - X^k D = k X^{k-1}                          k = 1..k_max
///   (XD) X^k = X^k (XD + k)                           k = 1..k_max
///   (XD - s lambda)_{n,lambda} X^j = X^j (XD + j - s lambda)_{n,lambda}
///       = X^j sum_k C(n,k) (j - s lambda)_{n-k,lambda} (XD)_{k,lambda}
///   (XD + r - s lambda)_{n,lambda} X^k = X^k (XD + r + k - s lambda)_{n,lambda}
///       = X^k sum_l C(n,l) (k - s lambda)_{n-l,lambda} (XD + r)_{l,lambda}
/// with j, k <= k_max, n <= 4, s <= 3, r <= 3.
VerificationReport commutation_checks(unsigned k_max, unsigned m_max, const ExactRational& lambda);

/// (XD)_{m+n,lambda} = (XD)_{m,lambda} (XD - m lambda)_{n,lambda}
///                   = (XD - m lambda)_{n,lambda} (XD)_{m,lambda}
/// for m + n <= max_total, applied to e^x and to x^0..x^{m_max}.
VerificationReport factorization_check(unsigned max_total, unsigned m_max,
                                       const ExactRational& lambda);

}  // namespace degbell
