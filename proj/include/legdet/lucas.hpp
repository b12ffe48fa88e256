#pragma once

// Lucas sequences u_n(A, B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legdet/modarith.hpp"

namespace legdet {

using BigInt = boost::multiprecision::cpp_int;

struct LucasSpec {
    std::int64_t A;
    std::int64_t B;

    /// A^2 - 4B, the discriminant of x^2 - Ax + B.
    std::int64_t discriminant() const noexcept { return A * A - 4 * B; }
};

/// Largest index lucas_u_exact accepts.
inline constexpr std::uint64_t kExactLucasBound = 10'000;

FpElement lucas_u_mod(std::uint64_t n, LucasSpec spec, std::uint32_t p);

/// u_0, ..., u_{last} mod p.
std::vector<FpElement> lucas_u_mod_sequence(std::uint64_t last, LucasSpec spec, std::uint32_t p);

/// Exact u_n; throws BoundExceeded for n > kExactLucasBound.
BigInt lucas_u_exact(std::uint64_t n, LucasSpec spec);

/// u_k(-2, 2) = (-4)^floor(k/4) * {0, 1, -2, 2}[k mod 4].
BigInt closed_form_u_neg2_2(std::uint64_t k);

struct Lemma41Result {
    /// u_p == ((A^2 - 4B)/p) mod p
    bool rank_congruence;
    /// u_{p - ((A^2-4B)/p)} == 0 mod p; empty when p | B.
    std::optional<bool> vanishing;
};

Lemma41Result check_lemma41(LucasSpec spec, std::uint32_t p);

}  // namespace legdet
