// qot: two-particle quantum oblivious transfer - simulator and analysis CLI.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 protocol abort (round limit), 4 I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qot/analysis.hpp"
#include "qot/cli_util.hpp"
#include "qot/protocol.hpp"
#include "qot/verify.hpp"

namespace {

using namespace qot;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAbort = 3;
constexpr int kExitIo = 4;

struct RunOpts {
    std::string lambda = "+1";
    std::string strategy = "honest";
    std::string alpha = "0";
    std::string beta = "0";
    std::uint64_t trials = 10000;
    double loss = 0.0;
    std::uint32_t max_rounds = 64;
    std::uint64_t seed = kDefaultSeed;
    bool dump_transcript = false;
};

struct VerifyOpts {
    std::uint64_t trials = 250000;
    std::uint64_t seed = kDefaultSeed;
    bool inject_bug = false;
};

struct SweepOpts {
    std::string lambda = "+1";
    std::string grid_step = "0.0625pi";
    std::uint64_t trials = 2000;
    std::uint64_t seed = kDefaultSeed;
    std::string output; // empty: CSV to stdout
};

struct AttackOpts {
    std::string kind = "storage";
    std::string lambda = "+1";
    std::string alpha = "0";
    std::string beta = "0";
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
};

struct CkOpts {
    std::vector<std::string> axes;
    std::uint64_t trials = 100000;
    std::uint64_t seed = kDefaultSeed;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
}

const char* theta_label(const PreparationAngle& theta) {
    const double t = theta.radians();
    if (t == 0.0)
        return "0";
    if (t == kHalfPi)
        return "pi/2";
    if (t == kPi)
        return "pi";
    return "3pi/2";
}

bool build_strategy(const RunOpts& opts, Strategy& out, std::string& error) {
    if (opts.strategy == "honest") {
        out = Honest{};
        return true;
    }
    if (opts.strategy == "storage") {
        out = Storage{};
        return true;
    }
    const auto alpha = parse_angle(opts.alpha);
    const auto beta = parse_angle(opts.beta);
    if (!alpha || !beta) {
        error = "invalid angle (expected radians, optionally with a pi "
                "suffix, e.g. 0.25pi)";
        return false;
    }
    out = FixedAngles{MeasurementAxis(*alpha), MeasurementAxis(*beta)};
    return true;
}

int cmd_run(const RunOpts& opts) {
    const auto lambda = parse_ot_bit(opts.lambda);
    if (!lambda)
        return usage_error("invalid --lambda (use +1, -1, 1, or 0)");
    if (opts.trials == 0)
        return usage_error("--trials must be at least 1");
    if (!(opts.loss >= 0.0 && opts.loss < 1.0))
        return usage_error("--loss must be in [0, 1)");
    if (opts.max_rounds == 0)
        return usage_error("--max-rounds must be at least 1");

    Strategy strategy = Honest{};
    std::string error;
    if (!build_strategy(opts, strategy, error))
        return usage_error(error);

    const ChannelConfig channel{opts.loss, opts.max_rounds};
    const RandomStream root(opts.seed);
    const bool per_session = opts.trials <= 16 || opts.dump_transcript;

    std::uint64_t knows = 0;
    std::uint64_t correct_knowing = 0;
    std::uint64_t correct_blind = 0;
    std::uint64_t correct_total = 0;
    std::uint64_t rounds_total = 0;

    for (std::uint64_t i = 0; i < opts.trials; ++i) {
        const SessionResult r =
            run_session(*lambda, strategy, channel, root.split(2 * i).seed(),
                        root.split(2 * i + 1).seed());
        rounds_total += r.rounds_used;
        const bool correct = r.bob_inferred && *r.bob_inferred == *lambda;
        if (correct)
            ++correct_total;
        if (r.bob_knows) {
            ++knows;
            if (correct)
                ++correct_knowing;
        } else if (correct) {
            ++correct_blind;
        }

        if (per_session) {
            std::printf("session %llu: rounds=%u basis=%c matched=%s "
                        "knows=%s inferred=%s\n",
                        static_cast<unsigned long long>(i + 1), r.rounds_used,
                        basis_letter(r.basis),
                        r.bob_axis_matched ? "yes" : "no",
                        r.bob_knows ? "yes" : "no",
                        r.bob_inferred ? to_cstr(*r.bob_inferred) : "none");
            if (opts.dump_transcript) {
                std::printf("transcript:\n");
                std::fputs(r.transcript.to_text().c_str(), stdout);
            }
        }
    }

    const double n = static_cast<double>(opts.trials);
    std::printf("lambda=%s strategy=%s trials=%llu loss=%g seed=%llu\n",
                to_cstr(*lambda), strategy_name(strategy),
                static_cast<unsigned long long>(opts.trials), opts.loss,
                static_cast<unsigned long long>(opts.seed));
    std::printf("mean rounds        %.6g\n",
                static_cast<double>(rounds_total) / n);
    std::printf("bob-knows rate     %.6g\n", static_cast<double>(knows) / n);
    if (knows > 0)
        std::printf("accuracy | knows   %.6g\n",
                    static_cast<double>(correct_knowing) /
                        static_cast<double>(knows));
    else
        std::printf("accuracy | knows   n/a\n");
    if (knows < opts.trials)
        std::printf("accuracy | !knows  %.6g\n",
                    static_cast<double>(correct_blind) /
                        static_cast<double>(opts.trials - knows));
    else
        std::printf("accuracy | !knows  n/a\n");
    std::printf("accuracy overall   %.6g\n",
                static_cast<double>(correct_total) / n);
    return kExitOk;
}

int cmd_verify(const VerifyOpts& opts) {
    if (opts.trials == 0)
        return usage_error("--trials must be at least 1");
    testhook::flip_oracle_first_particle = opts.inject_bug;
    const std::vector<CheckResult> results =
        run_verification({opts.trials, opts.seed});
    print_check_table(std::cout, results);
    if (all_passed(results)) {
        std::printf("all %zu checks passed\n", results.size());
        return kExitOk;
    }
    std::size_t failed = 0;
    for (const CheckResult& r : results)
        failed += r.passed ? 0 : 1;
    std::printf("%zu of %zu checks failed\n", failed, results.size());
    return kExitVerifyFailed;
}

void print_argmax_summary(std::ostream& out, const SweepResult& result) {
    out << "analytic maximum " << result.max_analytic << " attained at "
        << result.argmax_indices.size() << " of " << result.rows.size()
        << " cells\n";
    std::size_t listed = 0;
    for (std::size_t index : result.argmax_indices) {
        if (listed == 24) {
            out << "  ... (" << result.argmax_indices.size() - listed
                << " more)\n";
            break;
        }
        const SweepRow& row = result.rows[index];
        char line[96];
        std::snprintf(line, sizeof(line), "  alpha=%.10g beta=%.10g\n",
                      row.alpha.radians(), row.beta.radians());
        out << line;
        ++listed;
    }
}

int cmd_sweep(const SweepOpts& opts) {
    const auto lambda = parse_ot_bit(opts.lambda);
    if (!lambda)
        return usage_error("invalid --lambda (use +1, -1, 1, or 0)");
    const auto step = parse_angle(opts.grid_step);
    if (!step || !(*step > 0.0))
        return usage_error("invalid --grid-step (positive radians)");
    if (opts.trials == 0)
        return usage_error("--trials must be at least 1");

    SweepGrid grid;
    grid.alpha_values = sweep_axis_with_step(*step);
    grid.beta_values = grid.alpha_values;
    grid.lambda = *lambda;

    const SweepResult result = sweep(grid, opts.trials, opts.seed);

    if (!opts.output.empty()) {
        std::ofstream file(opts.output, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << opts.output
                      << " for writing\n";
            return kExitIo;
        }
        write_sweep_csv(file, result);
        file.flush();
        if (!file) {
            std::cerr << "error: failed writing " << opts.output << '\n';
            return kExitIo;
        }
        print_argmax_summary(std::cout, result);
        return kExitOk;
    }
    write_sweep_csv(std::cout, result);
    print_argmax_summary(std::cerr, result);
    return kExitOk;
}

int cmd_attack(const AttackOpts& opts) {
    const auto lambda = parse_ot_bit(opts.lambda);
    if (!lambda)
        return usage_error("invalid --lambda (use +1, -1, 1, or 0)");
    if (opts.trials == 0)
        return usage_error("--trials must be at least 1");

    if (opts.kind == "storage") {
        std::printf("storage attack: keep the pair, measure only after the "
                    "basis reveal\n");
        std::printf(" lambda basis first  second  inferred\n");
        RandomStream rng(opts.seed);
        for (OTBit l : {OTBit::Plus, OTBit::Minus}) {
            for (Basis basis : {Basis::Horizontal, Basis::Vertical}) {
                for (SpinSign s1 : {SpinSign::Plus, SpinSign::Minus}) {
                    const SpinSign s2 = sign(s1) * sign(l) > 0
                                            ? SpinSign::Plus
                                            : SpinSign::Minus;
                    const ParticlePair pair(direction(basis, s1),
                                            direction(basis, s2));
                    const OTBit inferred = storage_attack(pair, basis, rng);
                    std::printf(" %-6s %-5c %-6s %-7s %s\n", to_cstr(l),
                                basis_letter(basis), theta_label(pair.first()),
                                theta_label(pair.second()), to_cstr(inferred));
                }
            }
        }
        const SuccessReport report = monte_carlo_success(
            Storage{}, *lambda, opts.trials, opts.seed);
        std::printf("sessions: success=%.10g over %llu runs (exact %.10g)\n",
                    report.monte_carlo,
                    static_cast<unsigned long long>(report.trials),
                    report.brute_force);
        return kExitOk;
    }

    if (opts.kind != "fixed")
        return usage_error("--kind must be storage or fixed");
    const auto alpha = parse_angle(opts.alpha);
    const auto beta = parse_angle(opts.beta);
    if (!alpha || !beta)
        return usage_error("invalid --alpha/--beta");
    const Strategy strategy =
        FixedAngles{MeasurementAxis(*alpha), MeasurementAxis(*beta)};
    const SuccessReport report =
        monte_carlo_success(strategy, *lambda, opts.trials, opts.seed);
    std::printf("fixed-angle attack: alpha=%.10g beta=%.10g lambda=%s\n",
                MeasurementAxis(*alpha).radians(),
                MeasurementAxis(*beta).radians(), to_cstr(*lambda));
    std::printf("closed form    %.10g\n", report.analytic);
    std::printf("enumeration    %.10g\n", report.brute_force);
    std::printf("monte carlo    %.6f (se=%.6g, trials=%llu)\n",
                report.monte_carlo, report.mc_std_error,
                static_cast<unsigned long long>(report.trials));
    return kExitOk;
}

int cmd_ck_compare(const CkOpts& opts) {
    if (opts.trials == 0)
        return usage_error("--trials must be at least 1");
    std::vector<double> axes;
    if (opts.axes.empty()) {
        axes = {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0, kHalfPi};
    } else {
        for (const std::string& text : opts.axes) {
            const auto value = parse_angle(text);
            if (!value)
                return usage_error("invalid --axis value '" + text + "'");
            axes.push_back(*value);
        }
    }

    std::printf("single-particle protocol, optimal guessing after the basis "
                "reveal\n");
    std::printf("%-14s %-13s %-13s %-12s %-11s %s\n", "axis", "enumeration",
                "closed-form", "monte-carlo", "std-error", "trials");
    const RandomStream root(opts.seed);
    std::uint64_t lane = 0;
    for (double axis_value : axes) {
        const MeasurementAxis axis(axis_value);
        const SuccessReport report =
            ck_monte_carlo(axis, opts.trials, root.split(lane++).seed());
        std::printf("%-14.10g %-13.10g %-13.10g %-12.6f %-11.6g %llu\n",
                    axis.radians(), report.brute_force, report.analytic,
                    report.monte_carlo, report.mc_std_error,
                    static_cast<unsigned long long>(report.trials));
    }
    std::printf("two-particle protocol ceiling over all (alpha, beta): "
                "0.75\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-particle quantum oblivious transfer: protocol "
                 "simulator and security analysis"};
    app.require_subcommand(1);

    RunOpts run_opts;
    CLI::App* run = app.add_subcommand(
        "run", "execute protocol sessions and print statistics");
    run->add_option("--lambda", run_opts.lambda, "bit to transfer: +1/-1/1/0");
    run->add_option("--strategy", run_opts.strategy,
                    "bob strategy: honest, fixed, storage")
        ->check(CLI::IsMember({"honest", "fixed", "storage"}));
    run->add_option("--alpha", run_opts.alpha,
                    "first measurement angle (fixed strategy)");
    run->add_option("--beta", run_opts.beta,
                    "second measurement angle (fixed strategy)");
    run->add_option("--trials", run_opts.trials, "number of sessions");
    run->add_option("--loss", run_opts.loss, "per-particle loss probability");
    run->add_option("--max-rounds", run_opts.max_rounds,
                    "delivery attempts before aborting");
    run->add_option("--seed", run_opts.seed, "root seed");
    run->add_flag("--dump-transcript", run_opts.dump_transcript,
                  "print the message transcript of every session");

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the invariant battery and print a pass/fail table");
    verify->add_option("--trials", verify_opts.trials,
                       "Monte-Carlo trials per check");
    verify->add_option("--seed", verify_opts.seed, "root seed");
    verify->add_flag("--inject-bug", verify_opts.inject_bug, "")->group("");

    SweepOpts sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "scan measurement angle pairs and emit a CSV table");
    sweep_cmd->add_option("--lambda", sweep_opts.lambda, "encoded bit");
    sweep_cmd->add_option("--grid-step", sweep_opts.grid_step,
                          "axis step over [0, pi] (radians, pi suffix ok)");
    sweep_cmd->add_option("--trials", sweep_opts.trials,
                          "Monte-Carlo trials per grid cell");
    sweep_cmd->add_option("--seed", sweep_opts.seed, "root seed");
    sweep_cmd->add_option("--output", sweep_opts.output,
                          "CSV output path (default: stdout)");

    AttackOpts attack_opts;
    CLI::App* attack =
        app.add_subcommand("attack", "demonstrate cheating strategies");
    attack->add_option("--kind", attack_opts.kind, "storage or fixed")
        ->check(CLI::IsMember({"storage", "fixed"}));
    attack->add_option("--lambda", attack_opts.lambda, "encoded bit");
    attack->add_option("--alpha", attack_opts.alpha, "first angle (fixed)");
    attack->add_option("--beta", attack_opts.beta, "second angle (fixed)");
    attack->add_option("--trials", attack_opts.trials, "sessions to run");
    attack->add_option("--seed", attack_opts.seed, "root seed");

    CkOpts ck_opts;
    CLI::App* ck = app.add_subcommand(
        "ck-compare",
        "compare the single-particle protocol against the two-particle one");
    ck->add_option("--axis", ck_opts.axes,
                   "measurement axis (repeatable; pi suffix ok)");
    ck->add_option("--trials", ck_opts.trials, "Monte-Carlo trials per axis");
    ck->add_option("--seed", ck_opts.seed, "root seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run)
            return cmd_run(run_opts);
        if (*verify)
            return cmd_verify(verify_opts);
        if (*sweep_cmd)
            return cmd_sweep(sweep_opts);
        if (*attack)
            return cmd_attack(attack_opts);
        if (*ck)
            return cmd_ck_compare(ck_opts);
    } catch (const qot::RoundLimitExceeded& e) {
        std::cerr << "protocol aborted: " << e.what() << '\n';
        return kExitAbort;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    return kExitUsage;
}
