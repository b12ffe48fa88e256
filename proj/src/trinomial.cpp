#include "legdet/trinomial.hpp"

#include <string>
#include <utility>

#include "legdet/lucas.hpp"

namespace legdet {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Row m+1 from row m (length 2m+1) modulo `mod`; requires mod^2 < 2^64.
Coeffs advance(const Coeffs& prev, std::uint64_t b, std::uint64_t c, std::uint64_t mod) {
    const std::size_t len = prev.size();
    Coeffs next(len + 2, 0);
    for (std::size_t j = 0; j < len; ++j) {
        const std::uint64_t v = prev[j];
        if (v == 0) continue;
        // prev[j] is <m, j-m>; it feeds <m+1, j-m+1> (times 1), <m+1, j-m>
        // (times b) and <m+1, j-m-1> (times c).
        next[j + 2] = (next[j + 2] + v) % mod;
        next[j + 1] = (next[j + 1] + b * v) % mod;
        next[j] = (next[j] + c * v) % mod;
    }
    return next;
}

// Rows n-1 and n.
std::pair<Coeffs, Coeffs> rows_up_to(std::uint32_t n, std::uint64_t b, std::uint64_t c,
                                     std::uint64_t mod) {
    Coeffs prev, cur{1 % mod};
    for (std::uint32_t m = 0; m < n; ++m) {
        Coeffs next = advance(cur, b, c, mod);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(prev), std::move(cur)};
}

std::vector<FpElement> to_elements(const Coeffs& raw, std::uint32_t p) {
    std::vector<FpElement> out;
    out.reserve(raw.size());
    for (auto v : raw) out.emplace_back(static_cast<std::int64_t>(v), p);
    return out;
}

TrinomialRow make_row(std::uint32_t n, std::int64_t b, std::int64_t c, std::uint32_t p,
                      const Coeffs& raw) {
    return TrinomialRow(n, b, c, p, to_elements(raw, p));
}

}  // namespace

TrinomialRow::TrinomialRow(std::uint32_t n, std::int64_t b, std::int64_t c, std::uint32_t p,
                           std::vector<FpElement> coeffs)
    : n_(n), p_(p), b_(b, p), c_(c, p), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != 2 * std::size_t(n) + 1) {
        throw IndexOutOfRange("row " + std::to_string(n) + " needs " + std::to_string(2 * n + 1) +
                              " coefficients");
    }
}

FpElement TrinomialRow::at(std::int64_t k) const noexcept {
    if (k < -std::int64_t(n_) || k > std::int64_t(n_)) return FpElement(0, p_);
    return coeffs_[static_cast<std::size_t>(k + n_)];
}

TrinomialRow TrinomialRow::next() const {
    Coeffs raw;
    raw.reserve(coeffs_.size());
    for (auto e : coeffs_) raw.push_back(e.value());
    return make_row(n_ + 1, b_.value(), c_.value(), p_, advance(raw, b_.value(), c_.value(), p_));
}

TrinomialRow trinomial_row(std::uint32_t n, std::int64_t b, std::int64_t c, std::uint32_t p) {
    const auto bb = static_cast<std::uint64_t>(floor_mod(b, p));
    const auto cc = static_cast<std::uint64_t>(floor_mod(c, p));
    return make_row(n, b, c, p, rows_up_to(n, bb, cc, p).second);
}

TrinomialRow row_p_minus_1_direct(std::int64_t b, std::int64_t c, std::uint32_t p) {
    return trinomial_row(p - 1, b, c, p);
}

TrinomialRow row_p_minus_2_direct(std::int64_t b, std::int64_t c, std::uint32_t p) {
    return trinomial_row(p - 2, b, c, p);
}

TrinomialRow row_p_minus_1_lucas(std::int64_t b, std::int64_t c, std::uint32_t p) {
    const auto u = lucas_u_mod_sequence(p, LucasSpec{-b, c}, p);
    const std::int64_t n = p - 1;
    std::vector<FpElement> coeffs(2 * n + 1, FpElement(0, p));
    for (std::int64_t j = 0; j <= n; ++j) coeffs[n + j] = u[p - j];
    const FpElement cf(c, p);
    FpElement cpow(1, p);
    for (std::int64_t j = 1; j <= n; ++j) {
        cpow *= cf;
        coeffs[n - j] = cpow * coeffs[n + j];
    }
    return TrinomialRow(p - 1, b, c, p, std::move(coeffs));
}

FpElement lemma21_rhs(std::int64_t k, const TrinomialRow& row) {
    const std::int64_t p = row.p();
    if (row.n() + 1 != row.p()) throw IndexOutOfRange("lemma21_rhs expects row p-1");
    if (k < -(p - 2) || k > p - 2) {
        throw IndexOutOfRange("|k| must not exceed p-2, got k=" + std::to_string(k));
    }
    if (k == 0) return row.at(-1) + row.c() * row.at(1) - row.b();
    return (k + 1) * row.at(k - 1) - ((k - 1) * row.c()) * row.at(k + 1);
}

TrinomialRow row_p_minus_2(std::int64_t b, std::int64_t c, std::uint32_t p) {
    const FpElement disc(4 * c - b * b, p);
    if (disc.is_zero()) return row_p_minus_2_direct(b, c, p);
    const auto top = row_p_minus_1_lucas(b, c, p);
    const FpElement scale = inverse(disc);
    const std::int64_t n = p - 2;
    std::vector<FpElement> coeffs;
    coeffs.reserve(2 * n + 1);
    for (std::int64_t k = -n; k <= n; ++k) coeffs.push_back(scale * lemma21_rhs(k, top));
    return TrinomialRow(p - 2, b, c, p, std::move(coeffs));
}

std::vector<FpElement> expand_power_p_minus_2(std::int64_t b, std::int64_t c, std::uint32_t p) {
    const auto bb = static_cast<std::uint64_t>(floor_mod(b, p));
    const auto cc = static_cast<std::uint64_t>(floor_mod(c, p));
    // The coefficient list of (x^2+bx+c)^m is row m shifted by m, so the same
    // kernel applies.
    return to_elements(rows_up_to(p - 2, bb, cc, p).second, p);
}

std::vector<FpElement> fold_mod_xp_minus_x(std::span<const FpElement> coeffs, std::uint32_t p) {
    std::vector<FpElement> out(p, FpElement(0, p));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        std::size_t target = e;
        while (target >= p) target -= p - 1;
        out[target] += coeffs[e];
    }
    return out;
}

std::vector<FpElement> lemma22_regrouped(const TrinomialRow& row) {
    const std::uint32_t p = row.p();
    if (row.n() + 2 != p) throw IndexOutOfRange("lemma22_regrouped expects row p-2");
    std::vector<FpElement> out(p, FpElement(0, p));
    const FpElement c = row.c();
    out[0] += mod_pow(c, p - 2);
    out[p - 1] += row.at(1);
    out[p - 2] += row.at(0);
    for (std::int64_t k = 2; k <= std::int64_t(p) - 2; ++k) {
        out[k - 1] += row.at(k) + mod_pow(c, p - 1 - k) * row.at(p - 1 - k);
    }
    return out;
}

std::vector<FpElement> corollary21_coeffs(std::uint32_t p) {
    if (p % 3 != 1) {
        throw WrongResidueClass("closed form needs p == 1 (mod 3), got p=" + std::to_string(p));
    }
    const FpElement third = inverse(FpElement(3, p));
    std::vector<FpElement> out(p, FpElement(0, p));
    out[0] = FpElement(1, p);
    out[p - 1] = 2 * third;
    out[p - 2] = -third;
    for (std::int64_t k = 2; k <= std::int64_t(p) - 2; ++k) {
        const int iverson = floor_mod(k - 1, 3) == 0 ? 1 : 0;
        out[k - 1] = FpElement(k * legendre(k, 3) + iverson, p) - third;
    }
    return out;
}

Fp2Element central_trinomial_mod_p2(std::uint32_t p) {
    const Fp2Element probe(0, p);  // validates p < 2^16
    const auto raw = rows_up_to(p - 1, 1, 1, probe.modulus()).second;
    return Fp2Element(static_cast<std::int64_t>(raw[p - 1]), p);
}

}  // namespace legdet
