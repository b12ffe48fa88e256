#pragma once

// Generalized trinomial coefficients <n,k>_{b,c}, defined by
//   (x + b + c/x)^n = sum_k <n,k>_{b,c} x^k,
// reduced modulo an odd prime p.

#include <cstdint>
#include <span>
#include <vector>

#include "legdet/modarith.hpp"

namespace legdet {

class TrinomialRow {
public:
    /// coeffs[n + k] holds <n,k> for k = -n..n.
    TrinomialRow(std::uint32_t n, std::int64_t b, std::int64_t c, std::uint32_t p,
                 std::vector<FpElement> coeffs);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t p() const noexcept { return p_; }
    FpElement b() const noexcept { return b_; }
    FpElement c() const noexcept { return c_; }

    /// <n,k>; zero for |k| > n.
    FpElement at(std::int64_t k) const noexcept;

    std::span<const FpElement> coeffs() const noexcept { return coeffs_; }

    /// Row n+1 by one application of the recurrence.
    TrinomialRow next() const;

    friend bool operator==(const TrinomialRow&, const TrinomialRow&) = default;

private:
    std::uint32_t n_;
    std::uint32_t p_;
    FpElement b_;
    FpElement c_;
    std::vector<FpElement> coeffs_;
};

/// Row n via <n,k> = <n-1,k-1> + b<n-1,k> + c<n-1,k+1>; O(n^2).
TrinomialRow trinomial_row(std::uint32_t n, std::int64_t b, std::int64_t c, std::uint32_t p);

TrinomialRow row_p_minus_1_direct(std::int64_t b, std::int64_t c, std::uint32_t p);
TrinomialRow row_p_minus_2_direct(std::int64_t b, std::int64_t c, std::uint32_t p);

/// Row p-1 in O(p) from <p-1, p-k> == u_k(-b, c) for k = 0..p, completing
/// negative indices through <n,-k> = c^k <n,k>.
TrinomialRow row_p_minus_1_lucas(std::int64_t b, std::int64_t c, std::uint32_t p);

/// Row p-2 from the Lucas-filled row p-1 when 4c - b^2 is a unit mod p,
/// otherwise by the direct recurrence.
TrinomialRow row_p_minus_2(std::int64_t b, std::int64_t c, std::uint32_t p);

/// Right-hand side of the congruence for (4c - b^2)<p-2,k>, evaluated on
/// row p-1: for k = 0 it is <p-1,-1> + c<p-1,1> - b, otherwise
/// (k+1)<p-1,k-1> - (k-1)c<p-1,k+1>.
/// Throws IndexOutOfRange when |k| > p-2 or when the row is not row p-1.
FpElement lemma21_rhs(std::int64_t k, const TrinomialRow& row_p_minus_1);

/// Coefficients of (x^2 + bx + c)^(p-2), degree 0 .. 2p-4.
std::vector<FpElement> expand_power_p_minus_2(std::int64_t b, std::int64_t c, std::uint32_t p);

/// Reduces a polynomial modulo x^p - x (equal as functions on F_p), giving
/// exactly p coefficients.
std::vector<FpElement> fold_mod_xp_minus_x(std::span<const FpElement> coeffs, std::uint32_t p);

/// The regrouped form of (x^2+bx+c)^(p-2) modulo x^p - x, built from row p-2:
///   c^(p-2) + <p-2,1> x^(p-1) + <p-2,0> x^(p-2)
///     + sum_{1<k<p-1} (<p-2,k> + c^(p-1-k) <p-2,p-1-k>) x^(k-1).
std::vector<FpElement> lemma22_regrouped(const TrinomialRow& row_p_minus_2);

/// Closed-form coefficients of (x^2+x+1)^(p-2) modulo x^p - x for
/// p == 1 (mod 3):
///   1 + (2/3)x^(p-1) - (1/3)x^(p-2) + sum_{k=2}^{p-2} (k(k/3) + [3|k-1] - 1/3) x^(k-1).
/// Throws WrongResidueClass otherwise.
std::vector<FpElement> corollary21_coeffs(std::uint32_t p);

/// The central coefficient <p-1,0>_{1,1} reduced mod p^2.
Fp2Element central_trinomial_mod_p2(std::uint32_t p);

}  // namespace legdet
