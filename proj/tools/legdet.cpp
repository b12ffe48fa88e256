// Command-line front end: single determinant computations, prime listing and
// batch verification over prime ranges.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "legdet/detkit.hpp"
#include "legdet/modarith.hpp"
#include "legdet/scan.hpp"
#include "legdet/verify.hpp"

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::vector<legdet::ClaimId> parse_claims(const std::string& list) {
    if (list == "all") return {legdet::all_claims().begin(), legdet::all_claims().end()};
    std::vector<legdet::ClaimId> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto id = legdet::parse_claim(item);
        if (!id) throw std::invalid_argument("unknown claim '" + item + "'");
        out.push_back(*id);
    }
    return out;
}

unsigned default_workers() {
    if (const char* env = std::getenv("LEGENDRE_DET_WORKERS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring invalid LEGENDRE_DET_WORKERS='" << env << "'\n";
    }
    return 1;
}

int cmd_compute(std::int64_t p, std::int64_t b, std::int64_t c) {
    std::uint32_t prime = 0;
    try {
        prime = legdet::require_odd_prime(p);
    } catch (const legdet::NotOddPrime& e) {
        std::cerr << "error: " << p << " is not a prime (an odd prime is required)\n";
        return kExitUsage;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto det = legdet::compute_dp_det(prime, b, c);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << "p=" << prime << " b=" << b << " c=" << c << '\n'
              << "D_p(b,c) mod p = " << det << '\n'
              << "symbol = " << legdet::legendre(det) << '\n'
              << "elapsed_ms = " << std::fixed << std::setprecision(3) << ms << '\n';
    return 0;
}

int cmd_primes(std::int64_t pmin, std::int64_t pmax) {
    if (pmax > std::int64_t(legdet::kSieveBound)) {
        std::cerr << "error: pmax must not exceed " << legdet::kSieveBound << '\n';
        return kExitUsage;
    }
    for (auto p : legdet::primes_in_range(pmin, pmax)) std::cout << p << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinants D_p(b,c) over F_p and verification of their Legendre symbols"};
    app.require_subcommand(1);

    std::int64_t p = 0, b = 0, c = 0;
    auto* compute = app.add_subcommand("compute", "D_p(b,c) mod p and its Legendre symbol");
    compute->add_option("-p", p, "odd prime")->required();
    compute->add_option("-b", b, "coefficient b")->required();
    compute->add_option("-c", c, "coefficient c")->required();

    std::int64_t lo = 0, hi = 0;
    auto* primes = app.add_subcommand("primes", "list primes in [pmin, pmax]");
    primes->add_option("pmin", lo)->required();
    primes->add_option("pmax", hi)->required();

    legdet::ScanConfig config;
    std::string claims = "all", grid = "default", format = "human";
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "check claims over a prime range");
    verify->add_option("--claims", claims, "comma-separated claim ids or 'all'")->capture_default_str();
    verify->add_option("--pmin", config.pmin, "smallest prime")->capture_default_str();
    verify->add_option("--pmax", config.pmax, "largest prime")->capture_default_str();
    verify->add_option("--bc-grid", grid, "'default' or pairs 'b,c;b,c;...'")->capture_default_str();
    auto* workers_opt =
        verify->add_option("--workers", workers, "worker threads (default: $LEGENDRE_DET_WORKERS or 1)");
    verify->add_option("--format", format, "json-lines, csv or human")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(p, b, c);
        if (*primes) return cmd_primes(lo, hi);

        config.claims = parse_claims(claims);
        if (grid != "default") config.bc_grid = legdet::parse_bc_grid(grid);
        config.workers = workers_opt->count() ? workers : default_workers();
        auto fmt = legdet::parse_format(format);
        if (!fmt) throw std::invalid_argument("unknown format '" + format + "'");
        config.output_format = *fmt;
        config.validate();

        const auto records = legdet::run_scan(config);
        legdet::write_report(std::cout, records, config.output_format);
        const auto summary = legdet::summarize(records);
        if (config.output_format != legdet::OutputFormat::Human) legdet::write_summary(std::cerr, summary);
        for (const auto& [claim, s] : summary)
            if (s.fail) return kExitCounterexample;
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const legdet::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
