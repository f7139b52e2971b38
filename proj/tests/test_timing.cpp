#include "baton/error.hpp"
#include "baton/timing.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace baton;

TEST(Tempo, DerivedDurations) {
    const Tempo t(4, 120.0);
    EXPECT_DOUBLE_EQ(t.cycle_duration(), 2.0);
    EXPECT_DOUBLE_EQ(t.segment_duration(), 0.25);
    EXPECT_EQ(t.segment_count(), 8);
    EXPECT_THROW(Tempo(0, 60.0), DomainError);
    EXPECT_THROW(Tempo(4, 0.0), DomainError);
    EXPECT_THROW(Tempo(4, -10.0), DomainError);
    EXPECT_THROW(Tempo(4, std::nan("")), DomainError);
}

TEST(EaseCoefficients, KnownValues) {
    const auto identity = ease_coefficients(1.0, 1.0);
    EXPECT_EQ(identity.c3, 0.0);
    EXPECT_EQ(identity.c4, 0.0);
    EXPECT_EQ(identity.c5, 0.0);

    const auto hard = ease_coefficients(0.0, 2.0);
    EXPECT_EQ(hard.c3, 2.0);
    EXPECT_EQ(hard.c4, -1.0);
    EXPECT_EQ(hard.c5, 0.0);

    const auto figure = ease_coefficients(0.3, 1.7);
    EXPECT_NEAR(figure.c3, 1.4, 1e-14);
    EXPECT_NEAR(figure.c4, -0.7, 1e-14);
    EXPECT_EQ(figure.c5, 0.0);

    EXPECT_THROW(ease_coefficients(std::nan(""), 1.0), DomainError);
    EXPECT_THROW(ease_coefficients(1.0, INFINITY), DomainError);
}

TEST(Ease, ValuesAgainstMonomialOracle) {
    EXPECT_NEAR(oracle::ease(0.3, 1.7, 0.5), 0.28125, 1e-15);
    EXPECT_NEAR(ease(0.3, 1.7, 0.5), 0.28125, 1e-15);
    EXPECT_NEAR(oracle::ease(0.0, 2.0, 0.5), 0.1875, 1e-15);
    EXPECT_NEAR(ease(0.0, 2.0, 0.5), 0.1875, 1e-15);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ab(-1.0, 3.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double a = ab(rng), b = ab(rng), tau = unit(rng);
        EXPECT_NEAR(ease(a, b, tau), oracle::ease(a, b, tau), 1e-13);
    }
}

TEST(Ease, EndpointIdentities) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ab(-1.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const double a = ab(rng), b = ab(rng);
        EXPECT_NEAR(ease(a, b, 0.0), 0.0, 1e-12);
        EXPECT_NEAR(ease(a, b, 1.0), 1.0, 1e-12);
        EXPECT_NEAR(ease_rate(a, b, 0.0), a, 1e-12);
        EXPECT_NEAR(ease_rate(a, b, 1.0), b, 1e-12);
        const auto c = ease_coefficients(a, b);
        // Analytic second derivative 6c3 t + 12c4 t^2 + 20c5 t^3.
        EXPECT_NEAR(6 * c.c3 + 12 * c.c4 + 20 * c.c5, 0.0, 1e-12);
    }
    EXPECT_THROW(ease(1.0, 1.0, -0.1), DomainError);
    EXPECT_THROW(ease_rate(1.0, 1.0, 1.1), DomainError);
}

TEST(EaseRate, KnownValuesAndFiniteDifference) {
    EXPECT_NEAR(ease_rate(0.0, 2.0, 0.5), 1.0, 1e-15);
    const double fd = oracle::central_difference([](double x) { return oracle::ease(0.0, 2.0, x); },
                                                 0.5, 1e-5);
    EXPECT_NEAR(fd, 1.0, 1e-9);
    for (double tau = 0.0; tau <= 1.0; tau += 0.125) {
        EXPECT_EQ(ease_rate(1.0, 1.0, tau), 1.0);
    }
}

TEST(TimingLaw, SegmentRates) {
    const TimingLaw law(4, 120.0, 0.7);
    const auto even = law.segment_rates(0);
    EXPECT_NEAR(even.a, 0.3, 1e-15);
    EXPECT_NEAR(even.b, 1.7, 1e-15);
    const auto odd = law.segment_rates(1);
    EXPECT_NEAR(odd.a, 1.7, 1e-15);
    EXPECT_NEAR(odd.b, 0.3, 1e-15);
    const TimingLaw flat(3, 90.0, 0.0);
    for (int j = 0; j < 6; ++j) {
        EXPECT_EQ(flat.segment_rates(j).a, 1.0);
        EXPECT_EQ(flat.segment_rates(j).b, 1.0);
    }
    EXPECT_THROW(law.segment_rates(8), DomainError);
    EXPECT_THROW(law.segment_rates(-1), DomainError);
}

TEST(TimingLaw, BetaIsValidatedNotClamped) {
    EXPECT_THROW(TimingLaw(4, 60.0, 1.3), DomainError);
    EXPECT_THROW(TimingLaw(4, 60.0, -0.01), DomainError);
    EXPECT_THROW(TimingLaw(4, 60.0, std::nan("")), DomainError);
    try {
        TimingLaw(4, 60.0, 1.3);
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("[0,1]"), std::string::npos);
    }
    EXPECT_NO_THROW(TimingLaw(4, 60.0, 0.0));
    EXPECT_NO_THROW(TimingLaw(4, 60.0, 1.0));
}

TEST(TimingLaw, QuarticDegeneration) {
    for (int k = 0; k <= 1000; ++k) {
        const TimingLaw law(2, 60.0, k / 1000.0);
        EXPECT_LE(std::abs(law.coefficients(0).c5), 1e-15);
        EXPECT_LE(std::abs(law.coefficients(1).c5), 1e-15);
    }
}

TEST(Phase, KnownValues) {
    const TimingLaw uniform(1, 60.0, 0.0);
    EXPECT_EQ(phase(uniform, 0.0), 0.0);
    EXPECT_NEAR(phase(uniform, 0.25), 0.5, 1e-15);
    EXPECT_NEAR(phase(uniform, 1.25), 2.5, 1e-15);
    EXPECT_THROW(phase(uniform, -0.1), DomainError);
    EXPECT_THROW(phase(uniform, INFINITY), DomainError);
    EXPECT_THROW(phase_rate(uniform, -1.0), DomainError);
}

TEST(Phase, MatchesBruteForceOracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> time(0.0, 30.0);
    for (const double beta : {0.0, 0.35, 0.7, 1.0}) {
        const TimingLaw law(3, 75.0, beta);
        for (int k = 0; k < 500; ++k) {
            const double t = time(rng);
            EXPECT_NEAR(phase(law, t), oracle::phase(3, 75.0, beta, t), 1e-11);
        }
    }
}

TEST(PhaseRate, AnchorInstants) {
    const TimingLaw flat(4, 120.0, 0.0);
    for (double t = 0.0; t < 4.0; t += 0.0917) {
        EXPECT_NEAR(phase_rate(flat, t), 8.0 / 2.0, 1e-12);
    }
    const TimingLaw law(4, 120.0, 0.7);
    EXPECT_NEAR(phase_rate(law, 0.25), 6.8, 1e-12);
    for (int m = 0; m < 16; ++m) {
        const double expected = (m % 2 == 1 ? 1.7 : 0.3) / 0.25;
        EXPECT_NEAR(phase_rate(law, m * 0.25), expected, 1e-9) << "m=" << m;
    }
    const TimingLaw still(4, 120.0, 1.0);
    EXPECT_NEAR(phase_rate(still, 0.5), 0.0, 1e-12);
}

TEST(PhaseRate, MatchesFiniteDifferenceAndIsContinuous) {
    for (const double beta : {0.0, 0.5, 1.0}) {
        const TimingLaw law(2, 100.0, beta);
        const double delta = law.segment_duration();
        const auto f = [&](double t) { return phase(law, t); };
        for (double t = 0.013; t < 3.0; t += 0.0371) {
            EXPECT_NEAR(phase_rate(law, t), oracle::central_difference(f, t, 1e-6), 1e-5);
        }
        for (int m = 1; m < 12; ++m) {
            const double t = m * delta;
            const double h = 1e-7;
            const double left = (f(t) - f(t - h)) / h;
            const double right = (f(t + h) - f(t)) / h;
            EXPECT_NEAR(left, right, 1e-5 * (1.0 + std::abs(left)));
        }
    }
}

TEST(Phase, MonotoneAndAccumulating) {
    for (const double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const TimingLaw law(4, 96.0, beta);
        double prev = phase(law, 0.0);
        for (int k = 1; k <= 10000; ++k) {
            const double cur = phase(law, 3.0 * law.cycle_duration() * k / 10000.0);
            ASSERT_GE(cur - prev, -1e-12);
            prev = cur;
        }
        std::mt19937_64 rng(6);
        std::uniform_real_distribution<double> time(0.0, 10 * law.cycle_duration());
        for (int k = 0; k < 200; ++k) {
            const double t = time(rng);
            EXPECT_NEAR(phase(law, t + law.cycle_duration()) - phase(law, t), 8.0, 1e-9);
        }
    }
}

TEST(EaseRate, NonNegativeForBalancedRates) {
    for (int k = 0; k <= 10; ++k) {
        const double beta = k / 10.0;
        for (const auto [a, b] : {std::pair{1 - beta, 1 + beta}, std::pair{1 + beta, 1 - beta}}) {
            double lowest = INFINITY;
            for (int g = 0; g <= 10000; ++g) {
                lowest = std::min(lowest, ease_rate(a, b, g / 10000.0));
            }
            EXPECT_GE(lowest, -1e-12) << "beta=" << beta;
        }
    }
}
