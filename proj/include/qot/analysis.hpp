#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qot/adversary.hpp"
#include "qot/encoding.hpp"

namespace qot {

// Closed form for p(lambda' = lambda) under FixedAngles(alpha, beta):
// 1/2 + cos(alpha - beta)/4. The same expression holds for both bit
// values, which is why lambda does not enter the formula.
double analytic_success(const MeasurementAxis& alpha,
                        const MeasurementAxis& beta, OTBit lambda) noexcept;

struct BitDistribution {
    double p_plus = 0.0;  // p(lambda' = +1)
    double p_minus = 0.0; // p(lambda' = -1)
};

// Exact distribution of the inferred bit by enumeration: 2 bases x 2 sign
// patterns x 4 outcome pairs = 16 weighted terms, each weighted by
// (1/2)(1/2) times the single-particle outcome probabilities. Kept
// independent of the closed form (shares only aligned_probability) so the
// equality check between the two routes is meaningful.
BitDistribution brute_force_distribution(const MeasurementAxis& alpha,
                                         const MeasurementAxis& beta,
                                         OTBit lambda) noexcept;

// The p(lambda' = lambda) entry of the enumeration above.
double brute_force_success(const MeasurementAxis& alpha,
                           const MeasurementAxis& beta,
                           OTBit lambda) noexcept;

// Closed-form success prediction per strategy: FixedAngles from the cosine
// law, Honest 3/4 (decode when matched, coin otherwise), Storage 1.
double predicted_strategy_success(const Strategy& strategy,
                                  OTBit lambda) noexcept;

// Exact success per strategy by enumeration, with no closed-form input:
// FixedAngles via the 16-term oracle, Honest by enumerating basis, axis,
// pattern and outcomes, Storage by exhausting the 8 valid preparations.
double enumerated_strategy_success(const Strategy& strategy, OTBit lambda);

struct SuccessReport {
    double analytic = 0.0;
    double brute_force = 0.0;
    double monte_carlo = 0.0;
    double mc_std_error = 0.0;
    std::uint64_t trials = 0;
};

// Runs `trials` loss-free sessions of the strategy and fills a report with
// the empirical rate of lambda' = lambda, its binomial standard error, and
// the matching exact values. Per-trial seeds are lane splits of `seed`, so
// results do not depend on execution order.
SuccessReport monte_carlo_success(const Strategy& strategy, OTBit lambda,
                                  std::uint64_t trials, std::uint64_t seed);

struct SweepGrid {
    std::vector<MeasurementAxis> alpha_values;
    std::vector<MeasurementAxis> beta_values;
    OTBit lambda = OTBit::Plus;
};

struct SweepRow {
    MeasurementAxis alpha;
    MeasurementAxis beta;
    OTBit lambda;
    SuccessReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;              // row-major over (alpha, beta)
    std::vector<std::size_t> argmax_indices; // rows attaining the max
    double max_analytic = 0.0;               // of the analytic column
};

// One Monte-Carlo cell per (alpha, beta); cell seeds are lane splits of
// `seed` in row-major order. Throws std::invalid_argument on empty grids.
SweepResult sweep(const SweepGrid& grid, std::uint64_t trials_per_cell,
                  std::uint64_t seed);

// Grid axis covering [0, pi] inclusive with the given step (default
// pi/16, i.e. 17 points). Throws std::invalid_argument for step <= 0.
std::vector<MeasurementAxis> sweep_axis_with_step(double step);
std::vector<MeasurementAxis> default_sweep_axis();

// CSV serialization of a sweep: header
//   alpha,beta,lambda,analytic,brute_force,monte_carlo,std_error,trials
// with angles at 10 significant digits, LF line endings.
std::string sweep_to_csv(const SweepResult& result);
void write_sweep_csv(std::ostream& out, const SweepResult& result);

// Exact probability that ck_optimal_guess is correct for the
// single-particle protocol, averaged over uniform basis, uniform sign and
// the outcome distribution; enumeration over 2 bases x 2 signs x 2
// outcomes.
double ck_success_probability(const MeasurementAxis& measure_axis) noexcept;

// Closed form of the same quantity: 1/2 + (|cos a| + |sin a|)/4.
double ck_analytic_success(const MeasurementAxis& measure_axis) noexcept;

// Monte Carlo of the single-particle protocol with optimal guessing.
SuccessReport ck_monte_carlo(const MeasurementAxis& measure_axis,
                             std::uint64_t trials, std::uint64_t seed);

namespace testhook {
// Fault injection for the verify negative control: when set, the
// enumeration oracle applies the wrong sign to the first particle's
// alignment law, which must trip the oracle-vs-closed-form check.
extern bool flip_oracle_first_particle;
} // namespace testhook

} // namespace qot
