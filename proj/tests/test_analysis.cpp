#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "qot/analysis.hpp"
#include "stat_util.hpp"

using namespace qot;

namespace {

struct HookGuard {
    ~HookGuard() { testhook::flip_oracle_first_particle = false; }
};

double random_angle(RandomStream& rng) { return rng.next_unit() * kTwoPi; }

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("closed form at the landmark angle pairs") {
    CHECK(analytic_success(MeasurementAxis(0), MeasurementAxis(0),
                           OTBit::Plus) == 0.75);
    CHECK(std::fabs(analytic_success(MeasurementAxis(0), MeasurementAxis(kPi),
                                     OTBit::Plus) -
                    0.25) < 1e-15);
    CHECK(std::fabs(analytic_success(MeasurementAxis(0),
                                     MeasurementAxis(kHalfPi), OTBit::Minus) -
                    0.5) < 1e-15);
}

TEST_CASE("enumeration oracle at the landmark angle pairs") {
    CHECK(std::fabs(brute_force_success(MeasurementAxis(0), MeasurementAxis(0),
                                        OTBit::Plus) -
                    0.75) < 1e-12);
    CHECK(std::fabs(brute_force_success(MeasurementAxis(kPi / 4.0),
                                        MeasurementAxis(kPi / 4.0),
                                        OTBit::Minus) -
                    0.75) < 1e-12);
    // frozen from a high-precision evaluation of the 16-term sum
    CHECK(std::fabs(brute_force_success(MeasurementAxis(0.3),
                                        MeasurementAxis(1.1), OTBit::Plus) -
                    0.6741766773367913) < 1e-12);
    CHECK(std::fabs(brute_force_success(MeasurementAxis(0.3),
                                        MeasurementAxis(1.1), OTBit::Minus) -
                    0.6741766773367913) < 1e-12);
}

TEST_CASE("oracle equals closed form on a 32x32 grid, both bit values") {
    for (OTBit lambda : {OTBit::Plus, OTBit::Minus}) {
        for (int i = 0; i < 32; ++i) {
            for (int j = 0; j < 32; ++j) {
                const MeasurementAxis alpha(kTwoPi * i / 32.0);
                const MeasurementAxis beta(kTwoPi * j / 32.0);
                REQUIRE(std::fabs(brute_force_success(alpha, beta, lambda) -
                                  analytic_success(alpha, beta, lambda)) <
                        1e-12);
            }
        }
    }
}

TEST_CASE("enumerated bit distribution sums to one") {
    RandomStream rng(61);
    for (int i = 0; i < 200; ++i) {
        const MeasurementAxis alpha(random_angle(rng));
        const MeasurementAxis beta(random_angle(rng));
        for (OTBit lambda : {OTBit::Plus, OTBit::Minus}) {
            const BitDistribution d =
                brute_force_distribution(alpha, beta, lambda);
            REQUIRE(std::fabs(d.p_plus + d.p_minus - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("success depends only on the difference of the angles") {
    RandomStream rng(62);
    for (int i = 0; i < 200; ++i) {
        const double alpha = random_angle(rng);
        const double beta = random_angle(rng);
        const double delta = random_angle(rng);
        REQUIRE(std::fabs(
                    brute_force_success(MeasurementAxis(alpha + delta),
                                        MeasurementAxis(beta + delta),
                                        OTBit::Plus) -
                    brute_force_success(MeasurementAxis(alpha),
                                        MeasurementAxis(beta),
                                        OTBit::Plus)) < 1e-12);
    }
}

TEST_CASE("the cheating ceiling is 3/4, attained only at equal angles") {
    double max_value = 0.0;
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            const MeasurementAxis alpha(kTwoPi * i / 32.0);
            const MeasurementAxis beta(kTwoPi * j / 32.0);
            const double value =
                brute_force_success(alpha, beta, OTBit::Plus);
            max_value = std::max(max_value, value);
            if (i == j)
                REQUIRE(std::fabs(value - 0.75) < 1e-12);
            else if (((i - j) % 32 + 32) % 32 != 0)
                REQUIRE(value < 0.75 - 1e-6);
        }
    }
    CHECK(std::fabs(max_value - 0.75) < 1e-12);
}

TEST_CASE("strategy predictions agree between routes") {
    CHECK(predicted_strategy_success(Honest{}, OTBit::Plus) == 0.75);
    CHECK(predicted_strategy_success(Storage{}, OTBit::Minus) == 1.0);
    CHECK(std::fabs(enumerated_strategy_success(Honest{}, OTBit::Plus) -
                    0.75) < 1e-12);
    CHECK(std::fabs(enumerated_strategy_success(Honest{}, OTBit::Minus) -
                    0.75) < 1e-12);
    CHECK(enumerated_strategy_success(Storage{}, OTBit::Plus) == 1.0);
    CHECK(enumerated_strategy_success(Storage{}, OTBit::Minus) == 1.0);
}

TEST_CASE("monte carlo agrees with the exact values") {
    const std::uint64_t n = 100000;
    const Strategy diagonal =
        FixedAngles{MeasurementAxis(0.0), MeasurementAxis(0.0)};
    const SuccessReport report =
        monte_carlo_success(diagonal, OTBit::Plus, n, 71);
    CHECK(report.trials == n);
    CHECK(std::fabs(report.analytic - 0.75) < 1e-15);
    CHECK(std::fabs(report.analytic - report.brute_force) < 1e-12);
    CHECK(std::fabs(report.monte_carlo - report.analytic) <=
          5.0 * report.mc_std_error);
}

TEST_CASE("storage monte carlo is exact") {
    const SuccessReport report =
        monte_carlo_success(Storage{}, OTBit::Minus, 1000, 72);
    CHECK(report.monte_carlo == 1.0);
    CHECK(report.mc_std_error == 0.0);
    CHECK(report.brute_force == 1.0);
}

TEST_CASE("monte carlo is deterministic in the seed") {
    const Strategy strategy =
        FixedAngles{MeasurementAxis(0.4), MeasurementAxis(1.9)};
    const SuccessReport a =
        monte_carlo_success(strategy, OTBit::Minus, 20000, 73);
    const SuccessReport b =
        monte_carlo_success(strategy, OTBit::Minus, 20000, 73);
    CHECK(a.monte_carlo == b.monte_carlo);
    const SuccessReport c =
        monte_carlo_success(strategy, OTBit::Minus, 20000, 74);
    CHECK(a.monte_carlo != c.monte_carlo); // overwhelmingly likely
}

TEST_CASE("monte carlo rejects zero trials") {
    CHECK_THROWS_AS(monte_carlo_success(Honest{}, OTBit::Plus, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("sweep covers the grid in row-major order with exact columns") {
    SweepGrid grid;
    grid.alpha_values = sweep_axis_with_step(kHalfPi);
    grid.beta_values = grid.alpha_values;
    grid.lambda = OTBit::Plus;
    REQUIRE(grid.alpha_values.size() == 3); // 0, pi/2, pi

    const SweepResult result = sweep(grid, 2000, 75);
    REQUIRE(result.rows.size() == 9);
    std::size_t index = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const SweepRow& row = result.rows[index++];
            REQUIRE(row.alpha == grid.alpha_values[i]);
            REQUIRE(row.beta == grid.beta_values[j]);
            const double expected[] = {0.75, 0.5, 0.25};
            const std::size_t distance = i < j ? j - i : i - j;
            REQUIRE(std::fabs(row.report.analytic - expected[distance]) <
                    1e-12);
        }
    }
    // the diagonal is the exact argmax set
    REQUIRE(result.argmax_indices == std::vector<std::size_t>{0, 4, 8});
    CHECK(std::fabs(result.max_analytic - 0.75) < 1e-12);
}

TEST_CASE("sweep is deterministic and rejects empty grids") {
    SweepGrid grid;
    grid.alpha_values = {MeasurementAxis(0.0), MeasurementAxis(1.0)};
    grid.beta_values = {MeasurementAxis(0.5)};
    const SweepResult a = sweep(grid, 500, 76);
    const SweepResult b = sweep(grid, 500, 76);
    CHECK(sweep_to_csv(a) == sweep_to_csv(b));

    SweepGrid empty;
    empty.beta_values = {MeasurementAxis(0.0)};
    CHECK_THROWS_AS(sweep(empty, 10, 1), std::invalid_argument);
}

TEST_CASE("default sweep axis covers [0, pi] in sixteenths") {
    const std::vector<MeasurementAxis> axis = default_sweep_axis();
    REQUIRE(axis.size() == 17);
    CHECK(axis.front().radians() == 0.0);
    CHECK(axis.back().radians() == kPi);
    CHECK_THROWS_AS(sweep_axis_with_step(0.0), std::invalid_argument);
}

TEST_CASE("csv format is stable") {
    SweepGrid grid;
    grid.alpha_values = {MeasurementAxis(0.0)};
    grid.beta_values = {MeasurementAxis(0.0)};
    const SweepResult result = sweep(grid, 100, 77);
    const std::string csv = sweep_to_csv(result);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "alpha,beta,lambda,analytic,brute_force,monte_carlo,std_error,"
          "trials");
    std::string row;
    std::getline(lines, row);
    CHECK(row.substr(0, 17) == "0,0,+1,0.75,0.75,");
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("single-particle guessing success by enumeration") {
    CHECK(std::fabs(ck_success_probability(MeasurementAxis(0.0)) - 0.75) <
          1e-12);
    CHECK(std::fabs(ck_success_probability(MeasurementAxis(kHalfPi)) - 0.75) <
          1e-12);
    // cos^2(pi/8) at the diagonal
    CHECK(std::fabs(ck_success_probability(MeasurementAxis(kPi / 4.0)) -
                    0.8535533905932738) < 1e-12);
    // frozen intermediate point, pi/8
    CHECK(std::fabs(ck_success_probability(MeasurementAxis(kPi / 8.0)) -
                    0.8266407412190941) < 1e-12);
    CHECK(ck_success_probability(MeasurementAxis(kPi / 4.0)) > 0.85);
}

TEST_CASE("single-particle enumeration matches its closed form everywhere") {
    RandomStream rng(63);
    for (int i = 0; i < 200; ++i) {
        const MeasurementAxis axis(random_angle(rng));
        REQUIRE(std::fabs(ck_success_probability(axis) -
                          ck_analytic_success(axis)) < 1e-12);
    }
}

TEST_CASE("single-particle monte carlo agrees with the enumeration") {
    const SuccessReport report =
        ck_monte_carlo(MeasurementAxis(kPi / 4.0), 100000, 78);
    CHECK(std::fabs(report.monte_carlo - report.brute_force) <=
          5.0 * report.mc_std_error);
}

TEST_CASE("fault injection breaks only the first-particle factor") {
    HookGuard guard;
    const double before = brute_force_success(MeasurementAxis(0),
                                              MeasurementAxis(0), OTBit::Plus);
    CHECK(std::fabs(before - 0.75) < 1e-12);

    testhook::flip_oracle_first_particle = true;
    const double flipped = brute_force_success(MeasurementAxis(0),
                                               MeasurementAxis(0), OTBit::Plus);
    // flipping one particle's law turns the diagonal maximum into 1/4
    CHECK(std::fabs(flipped - 0.25) < 1e-12);
    CHECK(std::fabs(flipped -
                    analytic_success(MeasurementAxis(0), MeasurementAxis(0),
                                     OTBit::Plus)) > 0.1);
}

} // TEST_SUITE
