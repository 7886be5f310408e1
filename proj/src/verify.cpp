#include "qot/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <iomanip>
#include <ostream>

#include "qot/analysis.hpp"
#include "qot/protocol.hpp"

namespace qot {
namespace {

std::string fmt(const char* format, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 1, 2)))
#endif
    ;

std::string fmt(const char* format, ...) {
    char buffer[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof(buffer), format, args);
    va_end(args);
    return buffer;
}

CheckResult check_oracle_vs_analytic() {
    constexpr int kPoints = 32;
    double max_diff = 0.0;
    for (OTBit lambda : {OTBit::Plus, OTBit::Minus}) {
        for (int i = 0; i < kPoints; ++i) {
            for (int j = 0; j < kPoints; ++j) {
                const MeasurementAxis alpha(kTwoPi * i / kPoints);
                const MeasurementAxis beta(kTwoPi * j / kPoints);
                const double diff =
                    std::fabs(brute_force_success(alpha, beta, lambda) -
                              analytic_success(alpha, beta, lambda));
                max_diff = std::max(max_diff, diff);
            }
        }
    }
    return {"oracle-vs-analytic", max_diff < 1e-12,
            fmt("max|enum-closed|=%.3g on 32x32 grid, tol 1e-12", max_diff)};
}

CheckResult check_cheating_ceiling() {
    constexpr int kPoints = 32;
    bool ok = true;
    double max_value = 0.0;
    double min_value = 1.0;
    for (OTBit lambda : {OTBit::Plus, OTBit::Minus}) {
        for (int i = 0; i < kPoints; ++i) {
            for (int j = 0; j < kPoints; ++j) {
                const MeasurementAxis alpha(kTwoPi * i / kPoints);
                const MeasurementAxis beta(kTwoPi * j / kPoints);
                const double value = brute_force_success(alpha, beta, lambda);
                max_value = std::max(max_value, value);
                min_value = std::min(min_value, value);
                const int offset = ((i - j) % kPoints + kPoints) % kPoints;
                if (offset == 0)
                    ok = ok && std::fabs(value - 0.75) < 1e-12;
                else
                    ok = ok && value <= 0.75 - 1e-6;
                if (offset == kPoints / 2)
                    ok = ok && std::fabs(value - 0.25) < 1e-12;
                else
                    ok = ok && value >= 0.25 + 1e-6;
            }
        }
    }
    ok = ok && std::fabs(max_value - 0.75) < 1e-12 &&
         std::fabs(min_value - 0.25) < 1e-12;
    return {"cheating-ceiling", ok,
            fmt("max=%.10g at alpha=beta only, min=%.10g at pi offset",
                max_value, min_value)};
}

CheckResult check_monte_carlo(const char* name, double alpha, double beta,
                              std::uint64_t trials, std::uint64_t seed) {
    const Strategy strategy =
        FixedAngles{MeasurementAxis(alpha), MeasurementAxis(beta)};
    const SuccessReport report =
        monte_carlo_success(strategy, OTBit::Plus, trials, seed);
    const double mc_err = std::fabs(report.monte_carlo - report.analytic);
    const bool ok = mc_err <= 5.0 * report.mc_std_error &&
                    std::fabs(report.analytic - report.brute_force) < 1e-12;
    return {name, ok,
            fmt("mc=%.6f exact=%.6g |mc-exact|=%.2e <= 5se=%.2e, n=%llu",
                report.monte_carlo, report.analytic, mc_err,
                5.0 * report.mc_std_error,
                static_cast<unsigned long long>(report.trials))};
}

CheckResult check_storage_attack(std::uint64_t seed) {
    RandomStream rng(seed);
    std::uint64_t cases = 0;
    std::uint64_t correct = 0;

    // All 8 valid preparations.
    for (OTBit lambda : {OTBit::Plus, OTBit::Minus}) {
        for (Basis basis : {Basis::Horizontal, Basis::Vertical}) {
            for (SpinSign s1 : {SpinSign::Plus, SpinSign::Minus}) {
                const SpinSign s2 = sign(s1) * sign(lambda) > 0
                                        ? SpinSign::Plus
                                        : SpinSign::Minus;
                const ParticlePair pair(direction(basis, s1),
                                        direction(basis, s2));
                ++cases;
                if (storage_attack(pair, basis, rng) == lambda)
                    ++correct;
            }
        }
    }

    // Random full sessions.
    const ChannelConfig channel{0.0, 4};
    const RandomStream root(seed);
    constexpr std::uint64_t kSessions = 10000;
    for (std::uint64_t i = 0; i < kSessions; ++i) {
        const OTBit lambda = rng.bernoulli(0.5) ? OTBit::Plus : OTBit::Minus;
        const SessionResult r =
            run_session(lambda, Storage{}, channel, root.split(2 * i).seed(),
                        root.split(2 * i + 1).seed());
        ++cases;
        if (r.bob_inferred && *r.bob_inferred == lambda)
            ++correct;
    }

    return {"storage-attack", correct == cases,
            fmt("%llu/%llu recovered (8 exhaustive + %llu sessions)",
                static_cast<unsigned long long>(correct),
                static_cast<unsigned long long>(cases),
                static_cast<unsigned long long>(kSessions))};
}

CheckResult check_ck_comparison(std::uint64_t trials, std::uint64_t seed) {
    const MeasurementAxis diagonal(kPi / 4.0);
    const double expected = 0.5 + std::sqrt(2.0) / 4.0; // cos^2(pi/8)
    const double enumerated = ck_success_probability(diagonal);
    const SuccessReport report = ck_monte_carlo(diagonal, trials, seed);
    const double mc_err = std::fabs(report.monte_carlo - enumerated);
    const bool ok = std::fabs(enumerated - expected) < 1e-12 &&
                    enumerated > 0.75 + 0.10 &&
                    mc_err <= 5.0 * report.mc_std_error;
    return {"ck-comparison", ok,
            fmt("enum=%.10g (cos^2(pi/8)=%.10g), mc=%.6f, beats the "
                "two-particle ceiling 0.75",
                enumerated, expected, report.monte_carlo)};
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const RandomStream root(options.seed);
    std::vector<CheckResult> results;
    results.push_back(check_oracle_vs_analytic());
    results.push_back(check_cheating_ceiling());
    results.push_back(check_monte_carlo("mc-diagonal", 0.0, 0.0,
                                        options.trials, root.split(1).seed()));
    results.push_back(check_monte_carlo("mc-orthogonal", 0.0, kHalfPi,
                                        options.trials, root.split(2).seed()));
    results.push_back(check_storage_attack(root.split(3).seed()));
    results.push_back(
        check_ck_comparison(options.trials, root.split(4).seed()));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
    for (const CheckResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

void print_check_table(std::ostream& out,
                       const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(20)
            << r.name << ' ' << r.detail << '\n';
}

} // namespace qot
