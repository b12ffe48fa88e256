#pragma once

// Predictions for (D_p(b,c)/p) and claim-by-claim checks of the supporting
// congruences against brute-force oracles.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legdet/modarith.hpp"

namespace legdet {

enum class ClaimId {
    Thm11,
    Thm12,
    WsnIntro,
    SunD22Mod4,
    Eq17Reflection,
    HalfSize,
    WsnQr,
    Lemma21,
    Lemma22,
    Cor21,
    Eq212,
    Eq213,
    Lemma32,
    Eq33,
    Lemma41,
    Lemma42,
    Lemma43,
    Eq44,
    Eq410Cases,
    IntroBracketRelation,
};

/// Every claim, in catalogue order.
std::span<const ClaimId> all_claims() noexcept;

/// Lower-case identifier used on the command line and in reports, e.g. "thm1.1".
std::string_view claim_name(ClaimId id) noexcept;

/// Case-insensitive inverse of claim_name.
std::optional<ClaimId> parse_claim(std::string_view name);

/// True for claims checked once per parameter pair rather than once per prime.
bool claim_uses_grid(ClaimId id) noexcept;

enum class Status { Pass, Fail, NotApplicable };

std::string_view status_name(Status s) noexcept;

using ParamPair = std::pair<std::int64_t, std::int64_t>;

struct VerificationRecord {
    ClaimId claim;
    std::uint32_t p;
    /// (b,c), (A,B) or (c,d) depending on the claim.
    std::optional<ParamPair> params;
    std::string expected;
    std::string observed;
    Status status;
    double elapsed_ms = 0.0;
    /// Set when a check passed only because both sides vanished on a
    /// degenerate factor.
    bool degenerate = false;
};

/// U(k) = <p-2,k> + c^(p-1-k) <p-2,p-1-k> for k = 0..p-1.
class UFunction {
public:
    UFunction(std::uint32_t p, std::int64_t b, std::int64_t c, std::vector<FpElement> values);

    std::uint32_t p() const noexcept { return p_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    FpElement at(std::int64_t k) const;

    /// Smallest k in [2, p-2] with U(k) == 0.
    std::optional<std::int64_t> first_zero() const;

private:
    std::uint32_t p_;
    std::int64_t b_;
    std::int64_t c_;
    std::vector<FpElement> values_;
};

UFunction u_function(std::uint32_t p, std::int64_t b, std::int64_t c);

/// Predicted (D_p(1,1)/p). Throws UncoveredPrime for p = 3.
int predict_d11(std::uint32_t p);

/// Predicted (D_p(2,2)/p); for p == 3 (mod 4) the determinant itself vanishes.
int predict_d22(std::uint32_t p);

/// Determinant-symbol claims: Thm11, WsnIntro, Thm12, SunD22Mod4 and
/// Eq17Reflection (which uses b, c). Records outside the claim's residue
/// class come back NotApplicable.
VerificationRecord check_theorem(ClaimId claim, std::uint32_t p, std::int64_t b = 0, std::int64_t c = 0);

/// det[1/(i^2+j^2)] over 1 <= i,j <= (p-1)/2 against (2/p). Requires p == 3 (mod 4).
VerificationRecord check_intro_halfsize(std::uint32_t p);

/// 2 det[1/(i^2-ij+j^2)] over 1 <= i,j <= p-1 is a square. Requires p == 5 (mod 6).
VerificationRecord check_wsn_qr(std::uint32_t p);

/// Product formula for (D_p(b,c)/p) in terms of U, or vanishing when some
/// U(k) = 0. Throws HypothesisViolated when p | c(b^2-4c).
VerificationRecord check_lemma43_formula(std::uint32_t p, std::int64_t b, std::int64_t c);

/// Normalized values (-4)^(s+1) U(k) for k = 4s+r with (b,c) = (2,2).
/// Requires p == 1 (mod 8).
VerificationRecord check_case_analysis_mod8(std::uint32_t p);

/// (4U(k) formula for (b,c) = (2,2)) plus the residue-class consequences for
/// p == 5 and p == 1 (mod 8).
VerificationRecord check_eq410(std::uint32_t p);

VerificationRecord check_lemma21(std::uint32_t p, std::int64_t b, std::int64_t c);
VerificationRecord check_lemma22(std::uint32_t p, std::int64_t b, std::int64_t c);
VerificationRecord check_cor21(std::uint32_t p);
VerificationRecord check_eq212(std::uint32_t p);
VerificationRecord check_eq213(std::uint32_t p);
VerificationRecord check_lemma32(std::uint32_t p);
VerificationRecord check_eq33(std::uint32_t p);
VerificationRecord check_lucas_lemma41(std::uint32_t p, std::int64_t A, std::int64_t B);
VerificationRecord check_lemma42(std::uint32_t p, std::int64_t b, std::int64_t c);
VerificationRecord check_eq44(std::uint32_t p);

/// The relation between [c,d]_p and (c,d)_p, mod p always and over Z for
/// p <= kExactBracketBound.
VerificationRecord check_bracket_relation(std::uint32_t p, std::int64_t c, std::int64_t d);
inline constexpr std::uint32_t kExactBracketBound = 13;

/// All records for one claim at one prime. Grid claims produce one record
/// per pair; the rest ignore the grid. Residue-class filtering yields
/// NotApplicable records instead of errors. Each record is timed.
std::vector<VerificationRecord> run_claim(ClaimId claim, std::uint32_t p, std::span<const ParamPair> grid);

/// Square grid [-r, r]^2 in row-major order.
std::vector<ParamPair> square_grid(std::int64_t radius);

/// Default parameters for a grid claim: [-4,4]^2 for the Lucas lemma, [-3,3]^2 otherwise.
std::vector<ParamPair> default_grid(ClaimId claim);

}  // namespace legdet
