#include "qot/analysis.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qot/protocol.hpp"

namespace qot {

namespace testhook {
bool flip_oracle_first_particle = false;
} // namespace testhook

namespace {

constexpr std::array<Basis, 2> kBases{Basis::Horizontal, Basis::Vertical};
constexpr std::array<SpinSign, 2> kSigns{SpinSign::Plus, SpinSign::Minus};
constexpr std::array<int, 2> kOutcomes{+1, -1};

constexpr SpinSign partner_sign(SpinSign s1, OTBit lambda) noexcept {
    return sign(s1) * sign(lambda) > 0 ? SpinSign::Plus : SpinSign::Minus;
}

} // namespace

double analytic_success(const MeasurementAxis& alpha,
                        const MeasurementAxis& beta, OTBit /*lambda*/) noexcept {
    return 0.5 + 0.25 * std::cos(alpha.radians() - beta.radians());
}

BitDistribution brute_force_distribution(const MeasurementAxis& alpha,
                                         const MeasurementAxis& beta,
                                         OTBit lambda) noexcept {
    BitDistribution dist;
    for (Basis basis : kBases) {
        for (SpinSign s1 : kSigns) {
            const SpinSign s2 = partner_sign(s1, lambda);
            double p1 = aligned_probability(direction(basis, s1), alpha);
            if (testhook::flip_oracle_first_particle)
                p1 = 1.0 - p1;
            const double p2 =
                aligned_probability(direction(basis, s2), beta);
            for (int o1 : kOutcomes) {
                for (int o2 : kOutcomes) {
                    // (1/2 basis)(1/2 pattern) x per-outcome probabilities
                    const double w = 0.25 * (o1 > 0 ? p1 : 1.0 - p1) *
                                     (o2 > 0 ? p2 : 1.0 - p2);
                    if (o1 * o2 > 0)
                        dist.p_plus += w;
                    else
                        dist.p_minus += w;
                }
            }
        }
    }
    return dist;
}

double brute_force_success(const MeasurementAxis& alpha,
                           const MeasurementAxis& beta,
                           OTBit lambda) noexcept {
    const BitDistribution dist = brute_force_distribution(alpha, beta, lambda);
    return lambda == OTBit::Plus ? dist.p_plus : dist.p_minus;
}

double predicted_strategy_success(const Strategy& strategy,
                                  OTBit lambda) noexcept {
    if (const auto* fixed = std::get_if<FixedAngles>(&strategy))
        return analytic_success(fixed->alpha, fixed->beta, lambda);
    if (std::holds_alternative<Honest>(strategy))
        return 0.75; // matched half the time (then certain), coin otherwise
    return 1.0;      // storage
}

namespace {

// p(decode correct) when both particles of a lambda-encoding pair on
// `basis` are measured along `axis`.
double decode_success_for_basis(Basis basis, const MeasurementAxis& axis,
                                OTBit lambda) {
    double total = 0.0;
    for (SpinSign s1 : kSigns) {
        const SpinSign s2 = partner_sign(s1, lambda);
        const double p1 = aligned_probability(direction(basis, s1), axis);
        const double p2 = aligned_probability(direction(basis, s2), axis);
        for (int o1 : kOutcomes) {
            for (int o2 : kOutcomes) {
                const double w = 0.5 * (o1 > 0 ? p1 : 1.0 - p1) *
                                 (o2 > 0 ? p2 : 1.0 - p2);
                const bool correct = (o1 * o2 > 0) == (lambda == OTBit::Plus);
                if (correct)
                    total += w;
            }
        }
    }
    return total;
}

} // namespace

double enumerated_strategy_success(const Strategy& strategy, OTBit lambda) {
    if (const auto* fixed = std::get_if<FixedAngles>(&strategy))
        return brute_force_success(fixed->alpha, fixed->beta, lambda);

    if (std::holds_alternative<Honest>(strategy)) {
        // basis (1/2) x Bob's axis (1/2); mismatched rounds end in a blind
        // coin guess, exactly 1/2 by construction.
        double total = 0.0;
        for (Basis basis : kBases) {
            for (Basis axis_choice : kBases) {
                const double w = 0.25;
                if (axis_choice == basis)
                    total += w * decode_success_for_basis(
                                     basis, basis_axis(axis_choice), lambda);
                else
                    total += w * 0.5;
            }
        }
        return total;
    }

    // Storage: exhaust the 8 valid (basis, pattern) preparations, measured
    // in the revealed (= encoding) basis. Patterns are enumerated inside
    // decode_success_for_basis.
    double total = 0.0;
    for (Basis basis : kBases)
        total += 0.5 * decode_success_for_basis(basis, basis_axis(basis), lambda);
    return total;
}

SuccessReport monte_carlo_success(const Strategy& strategy, OTBit lambda,
                                  std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0)
        throw std::invalid_argument("trials must be at least 1");

    const ChannelConfig channel{0.0, 4}; // loss-free
    const RandomStream root(seed);
    std::uint64_t correct = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const SessionResult r =
            run_session(lambda, strategy, channel, root.split(2 * i).seed(),
                        root.split(2 * i + 1).seed());
        if (r.bob_inferred && *r.bob_inferred == lambda)
            ++correct;
    }

    SuccessReport report;
    report.trials = trials;
    report.monte_carlo =
        static_cast<double>(correct) / static_cast<double>(trials);
    report.mc_std_error = std::sqrt(report.monte_carlo *
                                    (1.0 - report.monte_carlo) /
                                    static_cast<double>(trials));
    report.analytic = predicted_strategy_success(strategy, lambda);
    report.brute_force = enumerated_strategy_success(strategy, lambda);
    return report;
}

SweepResult sweep(const SweepGrid& grid, std::uint64_t trials_per_cell,
                  std::uint64_t seed) {
    if (grid.alpha_values.empty() || grid.beta_values.empty())
        throw std::invalid_argument("sweep grid must be non-empty");

    SweepResult result;
    result.rows.reserve(grid.alpha_values.size() * grid.beta_values.size());
    const RandomStream root(seed);
    std::uint64_t cell = 0;
    for (const MeasurementAxis& alpha : grid.alpha_values) {
        for (const MeasurementAxis& beta : grid.beta_values) {
            const Strategy strategy = FixedAngles{alpha, beta};
            SuccessReport report = monte_carlo_success(
                strategy, grid.lambda, trials_per_cell, root.split(cell).seed());
            result.rows.push_back({alpha, beta, grid.lambda, report});
            ++cell;
        }
    }

    double best = 0.0;
    for (const SweepRow& row : result.rows)
        best = std::max(best, row.report.analytic);
    result.max_analytic = best;
    for (std::size_t i = 0; i < result.rows.size(); ++i)
        if (result.rows[i].report.analytic >= best - 1e-12)
            result.argmax_indices.push_back(i);
    return result;
}

std::vector<MeasurementAxis> sweep_axis_with_step(double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("grid step must be positive");
    std::vector<MeasurementAxis> axis;
    for (int k = 0;; ++k) {
        const double value = static_cast<double>(k) * step;
        if (value > kPi * (1.0 + 1e-12))
            break;
        axis.emplace_back(value);
    }
    return axis;
}

std::vector<MeasurementAxis> default_sweep_axis() {
    return sweep_axis_with_step(kPi / 16.0);
}

namespace {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "alpha,beta,lambda,analytic,brute_force,monte_carlo,std_error,"
           "trials\n";
    for (const SweepRow& row : result.rows) {
        out << format_number(row.alpha.radians()) << ','
            << format_number(row.beta.radians()) << ',' << to_cstr(row.lambda)
            << ',' << format_number(row.report.analytic) << ','
            << format_number(row.report.brute_force) << ','
            << format_number(row.report.monte_carlo) << ','
            << format_number(row.report.mc_std_error) << ','
            << row.report.trials << '\n';
    }
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    write_sweep_csv(out, result);
    return out.str();
}

double ck_success_probability(const MeasurementAxis& measure_axis) noexcept {
    double total = 0.0;
    for (Basis basis : kBases) {
        for (SpinSign s : kSigns) {
            const OTBit bit = s == SpinSign::Plus ? OTBit::Plus : OTBit::Minus;
            const double p_aligned = aligned_probability(
                direction(basis, s), measure_axis);
            for (int o : kOutcomes) {
                const double w =
                    0.25 * (o > 0 ? p_aligned : 1.0 - p_aligned);
                const Outcome outcome =
                    o > 0 ? Outcome::Aligned : Outcome::AntiAligned;
                if (ck_optimal_guess(outcome, measure_axis, basis) == bit)
                    total += w;
            }
        }
    }
    return total;
}

double ck_analytic_success(const MeasurementAxis& measure_axis) noexcept {
    const double a = measure_axis.radians();
    return 0.5 + 0.25 * (std::fabs(std::cos(a)) + std::fabs(std::sin(a)));
}

SuccessReport ck_monte_carlo(const MeasurementAxis& measure_axis,
                             std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0)
        throw std::invalid_argument("trials must be at least 1");

    RandomStream rng(seed);
    std::uint64_t correct = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const Basis basis = sample_basis(rng);
        const OTBit bit = rng.bernoulli(0.5) ? OTBit::Plus : OTBit::Minus;
        const CKProtocolInstance instance(bit, basis);
        const Outcome outcome = ck_run(instance, measure_axis, rng);
        if (ck_optimal_guess(outcome, measure_axis, basis) == bit)
            ++correct;
    }

    SuccessReport report;
    report.trials = trials;
    report.monte_carlo =
        static_cast<double>(correct) / static_cast<double>(trials);
    report.mc_std_error = std::sqrt(report.monte_carlo *
                                    (1.0 - report.monte_carlo) /
                                    static_cast<double>(trials));
    report.analytic = ck_analytic_success(measure_axis);
    report.brute_force = ck_success_probability(measure_axis);
    return report;
}

} // namespace qot
