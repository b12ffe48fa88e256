#include <doctest.h>

#include <random>

#include "legdet/lucas.hpp"
#include "oracles.hpp"

using namespace legdet;

TEST_CASE("lucas_u_mod examples") {
    for (std::uint32_t p : {5u, 13u, 101u}) {
        CHECK(lucas_u_mod(0, {3, -7}, p).is_zero());
        CHECK(lucas_u_mod(1, {3, -7}, p) == FpElement(1, p));
    }
    CHECK(lucas_u_mod(7, {1, -1}, 101) == FpElement(13, 101));
    CHECK(lucas_u_mod(5, {-2, 2}, 101) == FpElement(97, 101));
}

TEST_CASE("lucas_u_exact examples") {
    CHECK(lucas_u_exact(4, {-2, 2}) == 0);
    CHECK(lucas_u_exact(6, {-2, 2}) == 8);
    CHECK(lucas_u_exact(10, {1, -1}) == 55);
    CHECK_THROWS_AS(lucas_u_exact(kExactLucasBound + 1, {1, -1}), BoundExceeded);
    CHECK_NOTHROW(lucas_u_exact(kExactLucasBound, {1, -1}));
}

TEST_CASE("closed form for u_k(-2,2)") {
    CHECK(closed_form_u_neg2_2(0) == 0);
    CHECK(closed_form_u_neg2_2(3) == 2);
    CHECK(closed_form_u_neg2_2(9) == 16);
    CHECK(closed_form_u_neg2_2(9) == oracle::lucas_by_recurrence(9, -2, 2));
    for (std::uint64_t k = 0; k <= 2000; ++k) {
        REQUIRE(closed_form_u_neg2_2(k) == lucas_u_exact(k, {-2, 2}));
    }
}

TEST_CASE("modular and exact evaluation agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> param(-5, 5);
    const std::uint32_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int trial = 0; trial < 40; ++trial) {
        const LucasSpec spec{param(rng), param(rng)};
        const std::uint32_t p = primes[trial % std::size(primes)];
        const auto seq = lucas_u_mod_sequence(500, spec, p);
        for (std::uint64_t n = 0; n <= 500; n += 7) {
            const BigInt exact = lucas_u_exact(n, spec);
            REQUIRE(exact == oracle::lucas_by_recurrence(n, spec.A, spec.B));
            const BigInt r = exact % p;
            CHECK(seq[n] == FpElement(r.convert_to<std::int64_t>(), p));
            CHECK(lucas_u_mod(n, spec, p) == seq[n]);
        }
    }
}

TEST_CASE("check_lemma41 examples") {
    auto fib5 = check_lemma41({1, -1}, 5);
    CHECK(fib5.rank_congruence);
    REQUIRE(fib5.vanishing.has_value());
    CHECK(*fib5.vanishing);

    CHECK(lucas_u_mod(17, {-2, 2}, 17) == FpElement(legendre(-4, 17), 17));
    CHECK(check_lemma41({-2, 2}, 17).rank_congruence);
    for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u}) CHECK(lucas_u_mod(p - 1, {-2, 2}, p).is_zero());

    // p | B leaves the second congruence out of scope.
    CHECK_FALSE(check_lemma41({3, 7}, 7).vanishing.has_value());
}

TEST_CASE("check_lemma41 over a parameter square") {
    for (std::uint32_t p = 3; p <= 499; p += 2) {
        if (!is_odd_prime(p)) continue;
        for (std::int64_t A = -4; A <= 4; ++A) {
            for (std::int64_t B = -4; B <= 4; ++B) {
                const auto r = check_lemma41({A, B}, p);
                REQUIRE(r.rank_congruence);
                REQUIRE(r.vanishing.value_or(true));
            }
        }
    }
}
