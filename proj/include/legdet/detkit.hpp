#pragma once

// Dense matrices over F_p and the determinants built from them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "legdet/lucas.hpp"
#include "legdet/modarith.hpp"

namespace legdet {

/// Square matrix over F_p, row-major.
class MatrixFp {
public:
    MatrixFp(std::size_t dim, std::uint32_t p);

    /// Entries given as integers, reduced mod p. Rows must form a square.
    static MatrixFp from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t dim() const noexcept { return dim_; }
    std::uint32_t p() const noexcept { return p_; }

    FpElement at(std::size_t i, std::size_t j) const noexcept {
        return FpElement(entries_[i * dim_ + j], p_);
    }
    void set(std::size_t i, std::size_t j, FpElement v);
    void set(std::size_t i, std::size_t j, std::int64_t v) noexcept {
        entries_[i * dim_ + j] = static_cast<std::uint32_t>(floor_mod(v, p_));
    }

    bool is_symmetric() const noexcept;

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    friend FpElement det_mod_p(MatrixFp m);

    std::size_t dim_;
    std::uint32_t p_;
    std::vector<std::uint32_t> entries_;
};

/// Determinant by Gaussian elimination on the (by-value) working copy.
FpElement det_mod_p(MatrixFp m);

/// Entry (i,j), 1 <= i,j <= p-1, is (i^2 + bij + cj^2)^(p-2) mod p.
MatrixFp build_dp_matrix(std::uint32_t p, std::int64_t b, std::int64_t c);

/// D_p(b,c) mod p by elimination on build_dp_matrix.
FpElement compute_dp_det(std::uint32_t p, std::int64_t b, std::int64_t c);

/// (D_p(b,c) / p).
int compute_dp_symbol(std::uint32_t p, std::int64_t b, std::int64_t c);

struct InvCount {
    std::uint32_t p;
    std::uint64_t count;
};

/// Inversions of i -> (i^-1 mod p) on 1..p-1, counted with a Fenwick tree.
InvCount inv_count(std::uint32_t p);

/// a_0 a_1 ... a_{n-1} * prod_{i<j} (X_i - X_j)(Y_i - Y_j), the closed form of
/// det[P(X_i Y_j)] for P = sum a_k x^k of degree below n. All three spans
/// must have the same length n >= 1 and share one modulus.
FpElement krattenthaler_det(std::span<const FpElement> poly_coeffs, std::span<const FpElement> xs,
                            std::span<const FpElement> ys);

/// Matrix of Legendre symbols ((i^2 + c ij + d j^2)/p), indices starting at
/// 0 (from_zero) or 1, up to p-1.
class SymbolMatrix {
public:
    SymbolMatrix(std::size_t dim, std::vector<std::int8_t> entries);

    std::size_t dim() const noexcept { return dim_; }
    int at(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }

    MatrixFp reduce_mod(std::uint32_t q) const;
    bool is_symmetric() const noexcept;

private:
    std::size_t dim_;
    std::vector<std::int8_t> entries_;
};

SymbolMatrix build_legendre_matrix(std::uint32_t p, std::int64_t c, std::int64_t d, bool from_zero);

/// Exact integer determinant by fraction-free (Bareiss) elimination.
BigInt det_exact(const SymbolMatrix& m);

}  // namespace legdet
