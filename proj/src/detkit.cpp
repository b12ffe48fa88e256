#include "legdet/detkit.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace legdet {

MatrixFp::MatrixFp(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p), entries_(dim * dim, 0) {
    if (dim == 0) throw IndexOutOfRange("matrix dimension must be positive");
}

MatrixFp MatrixFp::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    MatrixFp m(rows.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw IndexOutOfRange("matrix rows must form a square");
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void MatrixFp::set(std::size_t i, std::size_t j, FpElement v) {
    if (v.modulus() != p_) throw ModulusMismatch("entry modulus differs from matrix modulus");
    entries_[i * dim_ + j] = v.value();
}

bool MatrixFp::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (entries_[i * dim_ + j] != entries_[j * dim_ + i]) return false;
    return true;
}

FpElement det_mod_p(MatrixFp m) {
    const std::size_t n = m.dim_;
    const std::uint64_t p = m.p_;
    std::vector<std::uint64_t> a(m.entries_.begin(), m.entries_.end());
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return FpElement(0, m.p_);
        if (pivot != col) {
            std::swap_ranges(a.begin() + pivot * n, a.begin() + (pivot + 1) * n, a.begin() + col * n);
            det = (p - det) % p;
        }
        const std::uint64_t* prow = &a[col * n];
        det = det * prow[col] % p;
        const std::uint64_t inv = pow_mod(prow[col], p - 2, p);
        for (std::size_t r = col + 1; r < n; ++r) {
            std::uint64_t* row = &a[r * n];
            if (row[col] == 0) continue;
            const std::uint64_t f = p - row[col] * inv % p;
            for (std::size_t j = col + 1; j < n; ++j) row[j] = (row[j] + f * prow[j]) % p;
            row[col] = 0;
        }
    }
    return FpElement(static_cast<std::int64_t>(det), m.p_);
}

MatrixFp build_dp_matrix(std::uint32_t p, std::int64_t b, std::int64_t c) {
    std::vector<std::uint32_t> inv(p, 0);
    for (std::uint32_t x = 1; x < p; ++x) inv[x] = fermat_entry(FpElement(x, p)).value();
    const std::uint64_t bb = floor_mod(b, p), cc = floor_mod(c, p);
    MatrixFp m(p - 1, p);
    for (std::uint64_t i = 1; i < p; ++i) {
        for (std::uint64_t j = 1; j < p; ++j) {
            const std::uint64_t q = (i * i + bb * i % p * j + cc * j % p * j) % p;
            m.set(i - 1, j - 1, static_cast<std::int64_t>(inv[q]));
        }
    }
    return m;
}

FpElement compute_dp_det(std::uint32_t p, std::int64_t b, std::int64_t c) {
    return det_mod_p(build_dp_matrix(p, b, c));
}

int compute_dp_symbol(std::uint32_t p, std::int64_t b, std::int64_t c) {
    return legendre(compute_dp_det(p, b, c));
}

InvCount inv_count(std::uint32_t p) {
    // Scan i = 1..p-1 and count earlier entries whose inverse exceeds i^-1.
    std::vector<std::uint32_t> tree(p, 0);
    std::uint64_t count = 0;
    for (std::uint32_t i = 1; i < p; ++i) {
        const std::uint32_t v = fermat_entry(FpElement(i, p)).value();
        std::uint64_t not_greater = 0;
        for (std::uint32_t k = v; k > 0; k -= k & -k) not_greater += tree[k];
        count += (i - 1) - not_greater;
        for (std::uint32_t k = v; k < p; k += k & -k) ++tree[k];
    }
    return InvCount{p, count};
}

FpElement krattenthaler_det(std::span<const FpElement> poly, std::span<const FpElement> xs,
                            std::span<const FpElement> ys) {
    const std::size_t n = poly.size();
    if (n == 0 || xs.size() != n || ys.size() != n) {
        throw IndexOutOfRange("coefficients, X and Y must share one positive length");
    }
    FpElement result(1, poly[0].modulus());
    for (auto a : poly) result *= a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) result *= (xs[i] - xs[j]) * (ys[i] - ys[j]);
    return result;
}

SymbolMatrix::SymbolMatrix(std::size_t dim, std::vector<std::int8_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) throw IndexOutOfRange("symbol matrix must be square");
}

MatrixFp SymbolMatrix::reduce_mod(std::uint32_t q) const {
    MatrixFp m(dim_, q);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.set(i, j, at(i, j));
    return m;
}

bool SymbolMatrix::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SymbolMatrix build_legendre_matrix(std::uint32_t p, std::int64_t c, std::int64_t d, bool from_zero) {
    std::vector<int> chi(p, 0);
    for (std::uint32_t x = 1; x < p; ++x) chi[x] = legendre(x, p);
    const std::int64_t cc = floor_mod(c, p), dd = floor_mod(d, p);
    const std::int64_t first = from_zero ? 0 : 1;
    const std::size_t dim = p - first;
    std::vector<std::int8_t> entries;
    entries.reserve(dim * dim);
    for (std::int64_t i = first; i < p; ++i)
        for (std::int64_t j = first; j < p; ++j)
            entries.push_back(static_cast<std::int8_t>(chi[(i * i + cc * i % p * j + dd * j % p * j) % p]));
    return SymbolMatrix(dim, std::move(entries));
}

BigInt det_exact(const SymbolMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace legdet
