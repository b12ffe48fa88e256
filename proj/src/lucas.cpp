#include "legdet/lucas.hpp"

#include <string>

namespace legdet {

std::vector<FpElement> lucas_u_mod_sequence(std::uint64_t last, LucasSpec spec, std::uint32_t p) {
    const FpElement a(spec.A, p);
    const FpElement b(spec.B, p);
    std::vector<FpElement> u;
    u.reserve(last + 1);
    u.emplace_back(0, p);
    if (last >= 1) u.emplace_back(1, p);
    for (std::uint64_t n = 1; n < last; ++n) u.push_back(a * u[n] - b * u[n - 1]);
    return u;
}

FpElement lucas_u_mod(std::uint64_t n, LucasSpec spec, std::uint32_t p) {
    if (n == 0) return FpElement(0, p);
    const FpElement a(spec.A, p);
    const FpElement b(spec.B, p);
    FpElement prev(0, p), cur(1, p);
    for (std::uint64_t i = 1; i < n; ++i) {
        FpElement next = a * cur - b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt lucas_u_exact(std::uint64_t n, LucasSpec spec) {
    if (n > kExactLucasBound) {
        throw BoundExceeded("exact Lucas values are limited to n <= " + std::to_string(kExactLucasBound));
    }
    if (n == 0) return 0;
    BigInt prev = 0, cur = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = spec.A * cur - spec.B * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt closed_form_u_neg2_2(std::uint64_t k) {
    static constexpr int kTail[4] = {0, 1, -2, 2};
    BigInt base = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(k / 4));
    if ((k / 4) % 2 == 1) base = -base;
    return base * kTail[k % 4];
}

Lemma41Result check_lemma41(LucasSpec spec, std::uint32_t p) {
    const int symbol = legendre(spec.discriminant(), p);
    auto u = lucas_u_mod_sequence(p + 1, spec, p);
    Lemma41Result r{u[p] == FpElement(symbol, p), std::nullopt};
    if (floor_mod(spec.B, p) != 0) r.vanishing = u[p - symbol].is_zero();
    return r;
}

}  // namespace legdet
