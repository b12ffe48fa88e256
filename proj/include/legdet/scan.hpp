#pragma once

// Prime-range batch verification and report encoding.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "legdet/verify.hpp"

namespace legdet {

/// Upper bound accepted by the prime sieve.
inline constexpr std::uint32_t kSieveBound = 1'000'000;

/// Ascending primes in [pmin, pmax] (2 included when in range). Throws
/// BoundExceeded when pmax > kSieveBound.
std::vector<std::uint32_t> primes_in_range(std::int64_t pmin, std::int64_t pmax);

enum class OutputFormat { JsonLines, Csv, Human };

std::optional<OutputFormat> parse_format(std::string_view name);

struct ScanConfig {
    std::int64_t pmin = 3;
    std::int64_t pmax = 97;
    std::vector<ClaimId> claims;
    /// Empty means the per-claim default grid.
    std::vector<ParamPair> bc_grid;
    unsigned workers = 1;
    OutputFormat output_format = OutputFormat::Human;

    /// Throws std::invalid_argument when the invariants 3 <= pmin <= pmax,
    /// workers >= 1 and a nonempty claim list do not hold.
    void validate() const;
};

/// Parses "b,c;b,c;..." into pairs.
std::vector<ParamPair> parse_bc_grid(std::string_view text);

/// Runs every claim over every odd prime in range, fanning primes out over
/// config.workers threads. Records come back sorted by (claim, p, params)
/// regardless of the worker count.
std::vector<VerificationRecord> run_scan(const ScanConfig& config);

struct ClaimSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t not_applicable = 0;
    std::size_t degenerate = 0;
};

std::map<ClaimId, ClaimSummary> summarize(const std::vector<VerificationRecord>& records);

std::string to_json_line(const VerificationRecord& r);
std::string csv_header();
std::string to_csv_row(const VerificationRecord& r);
std::string to_human(const VerificationRecord& r);

/// Writes all records in the chosen format followed (for human output) by
/// per-claim summary lines.
void write_report(std::ostream& os, const std::vector<VerificationRecord>& records, OutputFormat format);

/// One line per claim: "<claim>: pass=N fail=N na=N".
void write_summary(std::ostream& os, const std::map<ClaimId, ClaimSummary>& summary);

}  // namespace legdet
