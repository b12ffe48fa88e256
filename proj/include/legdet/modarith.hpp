#pragma once

// Exact arithmetic in Z/pZ and Z/p^2Z for odd primes p below 2^31.

#include <cstdint>
#include <ostream>

#include "legdet/error.hpp"

namespace legdet {

/// Largest modulus accepted anywhere in the library. Keeps every product of
/// two residues inside 64 bits, including residues mod p^2 for p < 2^16.
inline constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

/// Least nonnegative residue of a modulo m (m > 0), also for negative a.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Deterministic trial division; intended for moduli up to about 10^6.
bool is_odd_prime(std::int64_t n) noexcept;

/// Throws NotOddPrime unless n is an odd prime no larger than kMaxPrime.
std::uint32_t require_odd_prime(std::int64_t n);

/// base^exp mod m with 0^0 = 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

class FpElement {
public:
    /// Reduces a into [0, p). p is trusted to be an odd prime; use
    /// PrimeField when the modulus comes from user input.
    FpElement(std::int64_t a, std::uint32_t p) noexcept
        : value_(static_cast<std::uint32_t>(floor_mod(a, p))), modulus_(p) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    /// The residue in (-p/2, p/2]; handy for printing symbols like -1.
    std::int64_t centered() const noexcept {
        return value_ > modulus_ / 2 ? std::int64_t(value_) - modulus_ : value_;
    }

    FpElement operator-() const noexcept { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

    friend FpElement operator+(FpElement a, FpElement b) {
        check(a, b);
        std::uint32_t s = a.value_ + b.value_;
        if (s >= a.modulus_) s -= a.modulus_;
        return raw(s, a.modulus_);
    }
    friend FpElement operator-(FpElement a, FpElement b) {
        check(a, b);
        return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
                   a.modulus_);
    }
    friend FpElement operator*(FpElement a, FpElement b) {
        check(a, b);
        return raw(static_cast<std::uint32_t>(std::uint64_t(a.value_) * b.value_ % a.modulus_),
                   a.modulus_);
    }
    friend FpElement operator*(std::int64_t k, FpElement b) noexcept { return FpElement(k, b.modulus_) * b; }

    FpElement& operator+=(FpElement o) { return *this = *this + o; }
    FpElement& operator-=(FpElement o) { return *this = *this - o; }
    FpElement& operator*=(FpElement o) { return *this = *this * o; }

    friend bool operator==(FpElement a, FpElement b) noexcept {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

    friend std::ostream& operator<<(std::ostream& os, FpElement a) { return os << a.value_; }

private:
    static FpElement raw(std::uint32_t v, std::uint32_t p) noexcept {
        FpElement e(0, p);
        e.value_ = v;
        return e;
    }
    static void check(FpElement a, FpElement b) {
        if (a.modulus_ != b.modulus_) throw ModulusMismatch("operands live in different fields");
    }

    std::uint32_t value_;
    std::uint32_t modulus_;
};

/// Field context: validates the modulus once, then hands out elements.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p) : p_(require_odd_prime(p)) {}

    std::uint32_t modulus() const noexcept { return p_; }
    FpElement operator()(std::int64_t a) const noexcept { return FpElement(a, p_); }
    FpElement zero() const noexcept { return FpElement(0, p_); }
    FpElement one() const noexcept { return FpElement(1, p_); }

private:
    std::uint32_t p_;
};

/// base^exponent in F_p; the empty product gives 1, also for base 0.
FpElement mod_pow(FpElement base, std::uint64_t exponent) noexcept;

/// a^(p-2): the inverse of a when a != 0, and 0 for a = 0.
FpElement fermat_entry(FpElement a) noexcept;

/// Inverse of a nonzero element; throws HypothesisViolated on zero.
FpElement inverse(FpElement a);

/// Legendre symbol (a/p) by Euler's criterion.
int legendre(std::int64_t a, std::uint32_t p) noexcept;

/// Legendre symbol of a residue.
inline int legendre(FpElement a) noexcept { return legendre(a.value(), a.modulus()); }

/// Residue of Z/p^2Z, p < 2^16 so that products stay in 64 bits.
class Fp2Element {
public:
    Fp2Element(std::int64_t a, std::uint32_t p);

    std::uint64_t value() const noexcept { return value_; }
    std::uint32_t prime() const noexcept { return p_; }
    std::uint64_t modulus() const noexcept { return std::uint64_t(p_) * p_; }

    friend Fp2Element operator+(Fp2Element a, Fp2Element b) {
        check(a, b);
        return raw((a.value_ + b.value_) % a.modulus(), a.p_);
    }
    friend Fp2Element operator-(Fp2Element a, Fp2Element b) {
        check(a, b);
        return raw((a.value_ + a.modulus() - b.value_) % a.modulus(), a.p_);
    }
    friend Fp2Element operator*(Fp2Element a, Fp2Element b) {
        check(a, b);
        return raw(a.value_ * b.value_ % a.modulus(), a.p_);
    }
    friend bool operator==(Fp2Element a, Fp2Element b) noexcept {
        return a.value_ == b.value_ && a.p_ == b.p_;
    }
    friend std::ostream& operator<<(std::ostream& os, Fp2Element a) { return os << a.value_; }

private:
    static Fp2Element raw(std::uint64_t v, std::uint32_t p) {
        Fp2Element e(0, p);
        e.value_ = v;
        return e;
    }
    static void check(Fp2Element a, Fp2Element b) {
        if (a.p_ != b.p_) throw ModulusMismatch("operands live in different rings");
    }

    std::uint64_t value_;
    std::uint32_t p_;
};

Fp2Element mod_pow(Fp2Element base, std::uint64_t exponent);

}  // namespace legdet
