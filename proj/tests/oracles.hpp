#pragma once

// Slow reference computations used only by the tests. Nothing here calls
// into the library's elimination, recurrence or Lucas code paths.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t pow_by_multiplication(std::int64_t base, std::uint64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i) r = r * mod(base, m) % m;
    return r;
}

/// Legendre symbol from the set of squares.
inline int legendre_by_squares(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0) return 0;
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    return squares.count(a) ? 1 : -1;
}

/// Exact Laurent expansion of (x + b + c/x)^n, keyed by exponent.
inline std::map<std::int64_t, BigInt> laurent_power(std::int64_t n, std::int64_t b, std::int64_t c) {
    std::map<std::int64_t, BigInt> acc{{0, 1}};
    for (std::int64_t i = 0; i < n; ++i) {
        std::map<std::int64_t, BigInt> next;
        for (const auto& [e, v] : acc) {
            next[e + 1] += v;
            next[e] += v * b;
            next[e - 1] += v * c;
        }
        acc = std::move(next);
    }
    return acc;
}

inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::int64_t p) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

/// (x^2 + bx + c)^e mod p by repeated squaring.
inline std::vector<std::int64_t> quadratic_power(std::int64_t b, std::int64_t c, std::uint64_t e, std::int64_t p) {
    std::vector<std::int64_t> result{1}, base{mod(c, p), mod(b, p), 1};
    while (e) {
        if (e & 1) result = poly_mul(result, base, p);
        base = poly_mul(base, base, p);
        e >>= 1;
    }
    return result;
}

/// Determinant by Laplace expansion along the first row.
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
    const std::size_t n = m.size();
    if (n == 1) return mod(m[0][0], p);
    std::int64_t total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        const std::int64_t term = mod(m[0][col], p) * cofactor_det(minor, p) % p;
        total = mod(total + (col % 2 ? -term : term), p);
    }
    return total;
}

inline std::uint64_t brute_inversions(std::int64_t p) {
    std::vector<std::int64_t> inv(p);
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j)
            if (i * j % p == 1) inv[i] = j;
    std::uint64_t count = 0;
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = i + 1; j < p; ++j)
            if (inv[i] > inv[j]) ++count;
    return count;
}

/// Fibonacci-style recurrence on plain integers.
inline BigInt lucas_by_recurrence(std::uint64_t n, std::int64_t A, std::int64_t B) {
    BigInt a = 0, b = 1;
    if (n == 0) return a;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt t = A * b - B * a;
        a = b;
        b = t;
    }
    return b;
}

}  // namespace oracle
