#include "legdet/modarith.hpp"

#include <string>

namespace legdet {

bool is_odd_prime(std::int64_t n) noexcept {
    if (n < 3 || n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t require_odd_prime(std::int64_t n) {
    if (n > std::int64_t(kMaxPrime) || !is_odd_prime(n)) throw NotOddPrime(n);
    return static_cast<std::uint32_t>(n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % m);
        base = static_cast<std::uint64_t>((unsigned __int128)base * base % m);
        exp >>= 1;
    }
    return result;
}

FpElement mod_pow(FpElement base, std::uint64_t exponent) noexcept {
    return FpElement(static_cast<std::int64_t>(pow_mod(base.value(), exponent, base.modulus())),
                     base.modulus());
}

FpElement fermat_entry(FpElement a) noexcept { return mod_pow(a, a.modulus() - 2); }

FpElement inverse(FpElement a) {
    if (a.is_zero()) throw HypothesisViolated("0 has no inverse mod " + std::to_string(a.modulus()));
    return fermat_entry(a);
}

int legendre(std::int64_t a, std::uint32_t p) noexcept {
    auto r = pow_mod(static_cast<std::uint64_t>(floor_mod(a, p)), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

Fp2Element::Fp2Element(std::int64_t a, std::uint32_t p) : value_(0), p_(p) {
    if (p >= (1u << 16)) throw BoundExceeded("mod p^2 arithmetic requires p < 65536");
    value_ = static_cast<std::uint64_t>(floor_mod(a, static_cast<std::int64_t>(modulus())));
}

Fp2Element mod_pow(Fp2Element base, std::uint64_t exponent) {
    return Fp2Element(static_cast<std::int64_t>(pow_mod(base.value(), exponent, base.modulus())),
                      base.prime());
}

}  // namespace legdet
