#include "legdet/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "legdet/modarith.hpp"

namespace legdet {

std::vector<std::uint32_t> primes_in_range(std::int64_t pmin, std::int64_t pmax) {
    if (pmax > std::int64_t(kSieveBound)) {
        throw BoundExceeded("pmax must not exceed " + std::to_string(kSieveBound));
    }
    std::vector<std::uint32_t> out;
    if (pmax < 2 || pmin > pmax) return out;
    std::vector<bool> composite(pmax + 1, false);
    for (std::int64_t i = 2; i * i <= pmax; ++i)
        if (!composite[i])
            for (std::int64_t j = i * i; j <= pmax; j += i) composite[j] = true;
    for (std::int64_t n = std::max<std::int64_t>(pmin, 2); n <= pmax; ++n)
        if (!composite[n]) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "json-lines" || name == "jsonl") return OutputFormat::JsonLines;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "human") return OutputFormat::Human;
    return std::nullopt;
}

void ScanConfig::validate() const {
    if (pmin < 3) throw std::invalid_argument("pmin must be at least 3");
    if (pmin > pmax) throw std::invalid_argument("pmin must not exceed pmax");
    if (pmax > std::int64_t(kSieveBound)) throw std::invalid_argument("pmax must not exceed 1000000");
    if (workers < 1) throw std::invalid_argument("workers must be positive");
    if (claims.empty()) throw std::invalid_argument("no claims selected");
}

std::vector<ParamPair> parse_bc_grid(std::string_view text) {
    std::vector<ParamPair> grid;
    auto number = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("bad integer in bc grid: '" + std::string(s) + "'");
        }
        return v;
    };
    while (!text.empty()) {
        const auto semi = text.find(';');
        const std::string_view pair = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (pair.find_first_not_of(' ') == std::string_view::npos) continue;
        const auto comma = pair.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("bc grid pairs look like 'b,c'");
        grid.emplace_back(number(pair.substr(0, comma)), number(pair.substr(comma + 1)));
    }
    if (grid.empty()) throw std::invalid_argument("empty bc grid");
    return grid;
}

namespace {

auto sort_key(const VerificationRecord& r) {
    const auto claim_pos = std::find(all_claims().begin(), all_claims().end(), r.claim) - all_claims().begin();
    return std::make_tuple(claim_pos, r.p, r.params.has_value(), r.params.value_or(ParamPair{0, 0}));
}

}  // namespace

std::vector<VerificationRecord> run_scan(const ScanConfig& config) {
    config.validate();
    std::vector<std::uint32_t> primes;
    for (auto p : primes_in_range(config.pmin, config.pmax))
        if (p != 2) primes.push_back(p);
    // Largest primes first so the expensive determinants start early.
    std::reverse(primes.begin(), primes.end());

    std::vector<std::vector<ParamPair>> grids;
    for (auto claim : config.claims) {
        grids.push_back(config.bc_grid.empty() ? default_grid(claim) : config.bc_grid);
    }

    std::vector<VerificationRecord> records;
    std::mutex sink;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto work = [&] {
        try {
            for (std::size_t i = next++; i < primes.size(); i = next++) {
                std::vector<VerificationRecord> local;
                for (std::size_t c = 0; c < config.claims.size(); ++c) {
                    auto part = run_claim(config.claims[c], primes[i], grids[c]);
                    std::move(part.begin(), part.end(), std::back_inserter(local));
                }
                std::lock_guard lock(sink);
                std::move(local.begin(), local.end(), std::back_inserter(records));
            }
        } catch (...) {
            std::lock_guard lock(sink);
            if (!failure) failure = std::current_exception();
            next = primes.size();
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(config.workers, primes.size() ? primes.size() : 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::sort(records.begin(), records.end(),
              [](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
    return records;
}

std::map<ClaimId, ClaimSummary> summarize(const std::vector<VerificationRecord>& records) {
    std::map<ClaimId, ClaimSummary> out;
    for (const auto& r : records) {
        auto& s = out[r.claim];
        switch (r.status) {
            case Status::Pass: ++s.pass; break;
            case Status::Fail: ++s.fail; break;
            case Status::NotApplicable: ++s.not_applicable; break;
        }
        if (r.degenerate) ++s.degenerate;
    }
    return out;
}

std::string to_json_line(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["claim"] = claim_name(r.claim);
    j["p"] = r.p;
    if (r.params) {
        j["b"] = r.params->first;
        j["c"] = r.params->second;
    } else {
        j["b"] = nullptr;
        j["c"] = nullptr;
    }
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["status"] = status_name(r.status);
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string csv_header() { return "claim,p,b,c,expected,observed,status,elapsed_ms"; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string to_csv_row(const VerificationRecord& r) {
    std::ostringstream os;
    os << claim_name(r.claim) << ',' << r.p << ',';
    if (r.params) os << r.params->first << ',' << r.params->second;
    else os << ',';
    os << ',' << csv_field(r.expected) << ',' << csv_field(r.observed) << ',' << status_name(r.status) << ','
       << std::fixed << std::setprecision(3) << r.elapsed_ms;
    return os.str();
}

std::string to_human(const VerificationRecord& r) {
    std::ostringstream os;
    os << std::left << std::setw(22) << claim_name(r.claim) << " p=" << std::setw(5) << r.p;
    if (r.params) os << " (" << r.params->first << "," << r.params->second << ")";
    os << "  " << status_name(r.status) << "  expected " << r.expected << "; observed " << r.observed;
    if (r.degenerate) os << "  [degenerate: both sides vanish]";
    return os.str();
}

void write_summary(std::ostream& os, const std::map<ClaimId, ClaimSummary>& summary) {
    for (auto claim : all_claims()) {
        auto it = summary.find(claim);
        if (it == summary.end()) continue;
        const auto& s = it->second;
        os << claim_name(claim) << ": pass=" << s.pass << " fail=" << s.fail << " na=" << s.not_applicable;
        if (s.degenerate) os << " degenerate=" << s.degenerate;
        os << '\n';
    }
}

void write_report(std::ostream& os, const std::vector<VerificationRecord>& records, OutputFormat format) {
    switch (format) {
        case OutputFormat::JsonLines:
            for (const auto& r : records) os << to_json_line(r) << '\n';
            break;
        case OutputFormat::Csv:
            os << csv_header() << '\n';
            for (const auto& r : records) os << to_csv_row(r) << '\n';
            break;
        case OutputFormat::Human:
            for (const auto& r : records) os << to_human(r) << '\n';
            write_summary(os, summarize(records));
            break;
    }
}

}  // namespace legdet
