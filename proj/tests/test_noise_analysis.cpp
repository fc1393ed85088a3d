#include <gtest/gtest.h>

#include <cmath>

#include "qopamp/invariants.hpp"
#include "qopamp/noise_analysis.hpp"

using namespace qopamp;

namespace {

DeviceParams worked_point() {
    DeviceParams p;
    p.R_l = p.R_r = p.R_0 = 50.0;
    p.R_f = 1000.0;
    p.constants = PhysicalConstants::normalized();
    return p;
}

}  // namespace

TEST(Estimator, UnitSignalCoefficient) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const DeviceParams p = sample_device(rng, PhysicalConstants::si());
        const FieldExpr est = estimator(p, 1e4);
        EXPECT_EQ(est.u(PortId::signal_l), complex(1.0, 0.0));
    }
}

TEST(Estimator, NoiseCoefficients) {
    const FieldExpr est = estimator(worked_point(), 1.0);
    EXPECT_NEAR(std::abs(est.u(PortId::readout_r)), std::sqrt(50.0) * std::sqrt(50.0) / 2.0 / 1000.0, 1e-15);
    EXPECT_NEAR(std::abs(est.u(PortId::readout_r)), 0.025, 1e-15);
    EXPECT_NEAR(std::abs(est.u(PortId::feedback_f)), std::sqrt(50.0) * std::sqrt(1000.0) / 1000.0, 1e-15);
    EXPECT_NEAR(std::abs(est.u(PortId::feedback_f)), 0.2236068, 1e-7);
}

TEST(AddedNoise, WorkedPoint) {
    const NoiseReport r = added_noise(worked_point(), 1.0);
    EXPECT_NEAR(r.term_r, 3.125e-4, 1e-15);
    EXPECT_NEAR(r.term_f, 0.025, 1e-15);
    EXPECT_NEAR(r.term_a, 3.125e-4, 1e-15);
    EXPECT_NEAR(r.term_b, 0.5253125, 1e-14);
    EXPECT_NEAR(r.sigma_total, 0.5509375, 1e-14);
    EXPECT_NEAR(added_noise_from_modes(worked_point(), 1.0), 0.5509375, 1e-14);
    EXPECT_NEAR(r.sigma_total, r.term_r + r.term_f + r.term_a + r.term_b, 1e-15);
    EXPECT_EQ(r.xi, 0.0);
}

TEST(AddedNoise, LargeFeedbackApproachesConjugatedLine) {
    DeviceParams p = worked_point();
    p.R_f = 1e9;
    EXPECT_NEAR(added_noise(p, 1.0).sigma_total, 0.5, 1e-7);
}

TEST(AddedNoise, ClassicalScaling) {
    // k_B T / hbar omega = 100 on every line
    DeviceParams cold = worked_point();
    DeviceParams hot = cold;
    for (PortId port : kAllPorts) hot.env.set(port, 100.0);
    const NoiseReport c = added_noise(cold, 1.0);
    const NoiseReport h = added_noise(hot, 1.0);
    const double ratio = 1.0 / std::tanh(1.0 / 200.0);
    EXPECT_NEAR(ratio, 200.0, 0.01 * 200.0 / 100.0);
    for (auto [hv, cv] : {std::pair{h.term_r, c.term_r}, {h.term_f, c.term_f}, {h.term_a, c.term_a}, {h.term_b, c.term_b}}) {
        EXPECT_NEAR(hv / cv, ratio, 1e-12 * ratio);
        EXPECT_NEAR(hv / cv, 200.0, 1e-4 * 200.0);
    }
}

TEST(AddedNoise, FormulaMatchesModeAlgebra) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> log_omega(2.0, 9.0);
    for (int i = 0; i < 1000; ++i) {
        const DeviceParams p = sample_device(rng, i % 3 ? PhysicalConstants::si() : PhysicalConstants::normalized());
        const double omega = std::pow(10.0, log_omega(rng));
        const NoiseReport r = added_noise(p, omega);
        EXPECT_NEAR(added_noise_from_modes(p, omega), r.sigma_total, 1e-12 * r.sigma_total);
        EXPECT_NEAR(r.sigma_total, r.term_r + r.term_f + r.term_a + r.term_b, 1e-12 * r.sigma_total);
        const double sigma_l = thermal_sigma(p.env.temperature(PortId::signal_l), omega, p.constants);
        EXPECT_GE(r.back_action, sigma_l);
    }
}

TEST(AddedNoise, ReadoutAndFeedbackTermsShrinkWithReactance) {
    DeviceParams p = worked_point();
    p.env.set(PortId::readout_r, 3.0).set(PortId::feedback_f, 2.0);
    double prev_r = INFINITY;
    double prev_f = INFINITY;
    for (double x = 0.0; x < 1e7; x = 2.0 * x + 10.0) {
        p.reactance = {ReactanceKind::constant_X, x};
        const NoiseReport r = added_noise(p, 1.0);
        EXPECT_LE(r.term_r, prev_r);
        EXPECT_LE(r.term_f, prev_f);
        prev_r = r.term_r;
        prev_f = r.term_f;
    }
    // terms a and b tend to their 1/Z_f -> 0 limits
    const NoiseReport far = added_noise(p, 1.0);
    EXPECT_NEAR(far.term_a, 0.0, 1e-9);
    EXPECT_NEAR(far.term_b, 0.5, 1e-6);
}

TEST(Xi, Values) {
    DeviceParams p = worked_point();
    EXPECT_EQ(xi_parameter(p), 0.0);
    p.R_l = 200.0;
    EXPECT_NEAR(xi_parameter(p), std::log(2.0), 1e-15);
    EXPECT_NEAR(xi_parameter(p), 0.693147, 1e-6);
    p.R_l = 50.0;
    p.R_0 = 200.0;
    EXPECT_NEAR(xi_parameter(p), -std::log(2.0), 1e-15);
}

TEST(SigmaAsymptotic, Values) {
    EXPECT_EQ(sigma_asymptotic(0.0, 7.0, 0.5), 0.5);
    EXPECT_NEAR(sigma_asymptotic(std::log(2.0), 0.5, 0.5), 1.0625, 1e-15);
    for (double xi = -10.0; xi <= 10.0; xi += 0.25) EXPECT_GE(sigma_asymptotic(xi, 0.5, 0.5), 0.5);
}

TEST(SigmaAsymptotic, MatchesLargeFeedbackLimit) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        DeviceParams p = sample_device(rng, PhysicalConstants::si());
        p.reactance = {};
        p.R_f = 1e12;
        const double omega = 1e5;
        const double sa = thermal_sigma(p.env.temperature(PortId::noise_a), omega, p.constants);
        const double sb = thermal_sigma(p.env.temperature(PortId::noise_b), omega, p.constants);
        // with R_f = 1e12 and resistances up to 1e6 the residual feedback terms
        // are O(R / R_f) relative
        p.R_l = std::min(p.R_l, 1e3);
        p.R_0 = std::min(p.R_0, 1e3);
        const double expected = sigma_asymptotic(xi_parameter(p), sa, sb);
        const double sigma_rf = thermal_sigma(p.env.temperature(PortId::feedback_f), omega, p.constants);
        const double sigma_rr = thermal_sigma(p.env.temperature(PortId::readout_r), omega, p.constants);
        const NoiseReport r = added_noise(p, omega);
        // readout and feedback contributions are the only non-asymptotic parts
        EXPECT_NEAR(r.term_a + r.term_b, expected, 1e-6 * expected);
        EXPECT_LE(r.term_r + r.term_f, 1e-8 * (sigma_rf + sigma_rr));
    }
}

TEST(SigmaAsymptotic, PaperLimitWithColdFeedback) {
    DeviceParams p = worked_point();
    p.R_f = 1e12;
    p.R_l = 200.0;
    p.R_r = 1e5;
    p.env.set(PortId::noise_a, 3.0).set(PortId::noise_b, 1.0);
    const double sa = thermal_sigma(3.0, 1.0, p.constants);
    const double sb = thermal_sigma(1.0, 1.0, p.constants);
    const double expected = sigma_asymptotic(xi_parameter(p), sa, sb);
    EXPECT_NEAR(added_noise(p, 1.0).sigma_total, expected, 1e-6 * expected);
}

TEST(OptimizeMatching, ColdAmplifier) {
    const MatchingOptimum opt = optimize_matching(worked_point(), 1.0);
    EXPECT_LT(std::abs(opt.xi_star), 1e-6);
    EXPECT_NEAR(opt.sigma_star, 0.5, 0.5e-9);
}

TEST(OptimizeMatching, HotLineAStillMatches) {
    const MatchingOptimum opt = minimize_matching(100.0, 0.5);
    // dense grid oracle
    double best_xi = 0.0;
    double best = INFINITY;
    for (int i = -200000; i <= 200000; ++i) {
        const double xi = i * 5e-5;
        const double v = sigma_asymptotic(xi, 100.0, 0.5);
        if (v < best) {
            best = v;
            best_xi = xi;
        }
    }
    EXPECT_EQ(best_xi, 0.0);
    EXPECT_LT(std::abs(opt.xi_star - best_xi), 1e-6);
    EXPECT_NEAR(opt.sigma_star, 0.5, 0.5e-9);
}

TEST(OptimizeMatching, EqualSpectra) {
    const MatchingOptimum opt = minimize_matching(5.0, 5.0);
    EXPECT_LT(std::abs(opt.xi_star), 1e-6);
    EXPECT_NEAR(opt.sigma_star, 5.0, 5e-9);
}

TEST(OptimizeMatching, MinimumTracksConjugatedLine) {
    const MatchingOptimum hot_a = minimize_matching(40.0, 2.0);
    const MatchingOptimum hot_b = minimize_matching(2.0, 40.0);
    EXPECT_LT(std::abs(hot_a.xi_star), 1e-6);
    EXPECT_LT(std::abs(hot_b.xi_star), 1e-6);
    EXPECT_NEAR(hot_a.sigma_star, 2.0, 2e-9);
    EXPECT_NEAR(hot_b.sigma_star, 40.0, 40e-9);
}

TEST(NoiseFigure, Values) {
    DeviceParams p = worked_point();
    p.R_f = 1e9;
    EXPECT_NEAR(noise_figure_db(p, 1.0), 3.0103, 0.001);
    EXPECT_NEAR(noise_figure_db(0.5, 0.5), 10.0 * std::log10(2.0), 1e-12);
    EXPECT_EQ(noise_figure_db(0.0, 0.5), 0.0);
    EXPECT_NEAR(noise_figure_db(3.0 * 0.7, 0.7), 10.0 * std::log10(4.0), 1e-12);
    EXPECT_NEAR(noise_figure_db(1.5, 0.5), 6.0206, 1e-4);
}

TEST(BackAction, Values) {
    DeviceParams p = worked_point();
    EXPECT_NEAR(back_action(p, 1.0), 1.5, 1e-14);

    p.R_0 = 1e-6;
    EXPECT_NEAR(back_action(p, 1.0), 0.5, 1e-7);

    // sigma = 5 on lines a and b: 1/2 coth(x) = 5
    p = worked_point();
    const double t = 1.0 / (2.0 * std::atanh(0.1));
    p.env.set(PortId::noise_a, t).set(PortId::noise_b, t);
    EXPECT_NEAR(thermal_sigma(t, 1.0, p.constants), 5.0, 1e-12);
    EXPECT_NEAR(back_action(p, 1.0), 10.5, 1e-11);
}

TEST(Sweep, SinglePoint) {
    const SweepSpec spec{3.0, 3.0, 1, Spacing::linear};
    const auto reports = sweep(worked_point(), spec);
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_EQ(reports[0], added_noise(worked_point(), 3.0));
}

TEST(Sweep, GridEndpointsAndOrder) {
    const SweepSpec log_spec{1e2, 1e8, 13, Spacing::logarithmic};
    const auto g = log_spec.grid();
    ASSERT_EQ(g.size(), 13u);
    EXPECT_EQ(g.front(), 1e2);
    EXPECT_EQ(g.back(), 1e8);
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);
    EXPECT_NEAR(g[2], 1e3, 1e-9);

    const auto lin = SweepSpec{1.0, 2.0, 5, Spacing::linear}.grid();
    EXPECT_EQ(lin.front(), 1.0);
    EXPECT_EQ(lin[2], 1.5);
    EXPECT_EQ(lin.back(), 2.0);

    EXPECT_THROW((SweepSpec{0.0, 1.0, 3, Spacing::linear}.grid()), std::invalid_argument);
    EXPECT_THROW((SweepSpec{2.0, 1.0, 3, Spacing::linear}.grid()), std::invalid_argument);
    EXPECT_THROW((SweepSpec{1.0, 2.0, 0, Spacing::linear}.grid()), std::invalid_argument);
}

TEST(Sweep, ResistiveFeedbackIsFlat) {
    const auto reports = sweep(worked_point(), {1e2, 1e9, 15, Spacing::logarithmic});
    for (const auto& r : reports) EXPECT_EQ(r.sigma_total, reports.front().sigma_total);
}

TEST(Sweep, CapacitiveFeedbackRaisesAmplifierTerms) {
    DeviceParams p = worked_point();
    p.reactance = {ReactanceKind::capacitive, 1e-6};
    const auto reports = sweep(p, {1e2, 1e8, 25, Spacing::logarithmic});
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const double z_prev = std::abs(feedback_impedance(p, reports[i - 1].omega));
        const double z_now = std::abs(feedback_impedance(p, reports[i].omega));
        EXPECT_LT(z_now, z_prev);
        EXPECT_GT(reports[i].term_a, reports[i - 1].term_a);
        EXPECT_GT(reports[i].term_b, reports[i - 1].term_b);
    }
}
