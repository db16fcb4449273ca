#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slloc/localization.hpp"
#include "slloc/spectral.hpp"

using namespace slloc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("alpha basics") {
    SUBCASE("constants give the interval length") {
        const Grid g(0.0, 2.5, 513);
        CHECK(alpha(sample(g, [](double) { return 3.0; })) ==
              doctest::Approx(2.5).epsilon(1e-12));
        CHECK(alpha(sample(g, [](double) { return -0.2; })) ==
              doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("sines give 2/3 for every mode") {
        const Grid g(0.0, 1.0, 4097);
        for (int n = 1; n <= 20; ++n) {
            const double a = alpha(sample(g, [n](double y) { return std::sin(n * kPi * y); }));
            CHECK(std::abs(a - 2.0 / 3.0) < 1e-6);
        }
    }
    SUBCASE("narrow bump localizes hard") {
        const Grid g(0.0, 1.0, 4097);
        const double width = 0.01;
        auto bump = [width](double x) {
            const double z = (x - 0.5) / width;
            return std::exp(-0.5 * z * z);
        };
        const double a = alpha(sample(g, bump));
        // 10x-resolution quadrature oracle.
        const Grid fine(0.0, 1.0, 40961);
        const double a_fine = alpha(sample(fine, bump));
        CHECK(std::abs(a - a_fine) <= 1e-6);
        CHECK(std::abs(a - width * std::sqrt(2.0 * kPi)) < 1e-4);
        CHECK(a < 0.1);  // far below the delocalized 2/3
    }
    SUBCASE("scale invariance") {
        const Grid g(0.0, 1.3, 257);
        std::mt19937 gen(5);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> v(g.n);
        for (double& x : v) x = dist(gen);
        const SampledFn u(g, v);
        const double base = alpha(u);
        for (double c : {2.0, -7.5, 1e-6}) {
            std::vector<double> scaled(v);
            for (double& x : scaled) x *= c;
            CHECK(std::abs(alpha(SampledFn(g, scaled)) - base) <= 1e-12 * base);
        }
    }
    SUBCASE("zero function is rejected") {
        const Grid g(0.0, 1.0, 65);
        CHECK_THROWS_AS(alpha(SampledFn(g, std::vector<double>(65, 0.0))), ZeroFunction);
    }
}

TEST_CASE("closed-form alpha of the reference wave") {
    SUBCASE("eigenfrequencies give exactly 2B/3") {
        for (double B : {1.0, 2.5}) {
            for (int n = 1; n <= 20; ++n) {
                const double lambda = n * n * kPi * kPi / (B * B);
                CHECK(std::abs(alpha_phi_closed_form(lambda, B) - 2.0 * B / 3.0) <
                      1e-13 * B);
            }
        }
    }
    SUBCASE("frozen quadrature oracle at lambda = 1, B = 1") {
        CHECK(alpha_phi_closed_form(1.0, 1.0) ==
              doctest::Approx(0.5994893573482556).epsilon(1e-12));
    }
    SUBCASE("high-frequency limit approaches 2B/3") {
        CHECK(std::abs(alpha_phi_closed_form(1e6, 1.0) - 2.0 / 3.0) < 2e-3);
    }
    SUBCASE("degenerate denominator flagged at tiny lambda") {
        CHECK_THROWS_AS(alpha_phi_closed_form(1e-30, 1.0), DegenerateDenominator);
    }
    SUBCASE("consistency with direct quadrature over random frequencies") {
        std::mt19937 gen(42);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            const double B = trial % 2 == 0 ? 1.0 : 2.5;
            const double lambda = std::pow(10.0, std::log10(0.5) +
                                                     (4.0 - std::log10(0.5)) * unif(gen));
            const Grid g(0.0, B, 8193);
            const double k = std::sqrt(lambda);
            const double direct = alpha(sample(g, [k](double y) { return std::sin(k * y); }));
            CHECK(std::abs(alpha_phi_closed_form(lambda, B) - direct) <= 1e-6);
        }
    }
}

TEST_CASE("bound coefficients") {
    SUBCASE("unit-coefficient problem has beta = gamma = 1 and the stated a, b") {
        // q = 1 so that Q = 1 and all three Q-norms are 1 on B = 1.
        const Problem prob = make_problem(1.0, CoefficientFn::constant(1.0),
                                          CoefficientFn::constant(1.0),
                                          CoefficientFn::constant(1.0));
        const LiouvilleForm lf = transform(prob, 2049);
        const BoundCoefficients c4 = bound_coefficients(lf, prob, 4.0);
        CHECK(c4.beta == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c4.gamma == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c4.a == doctest::Approx(0.25).epsilon(1e-10));
        const BoundCoefficients c1 = bound_coefficients(lf, prob, 1.0);
        // Frozen independent evaluation of (1/12 + 5/32 + 5/32)^{1/4}.
        CHECK(c1.b == doctest::Approx(0.7931915718197564).epsilon(1e-9));
    }
    SUBCASE("beta and gamma bracket 1 for a non-unit metric") {
        const Problem prob = preset("fig1-tanh-metric");
        const LiouvilleForm lf = transform(prob, 2049);
        const BoundCoefficients c = bound_coefficients(lf, prob, 100.0);
        // w = 1 collapses both constants to sqrt of the metric extremes.
        CHECK(c.beta == doctest::Approx(std::sqrt(0.10000000412230727)).epsilon(1e-6));
        CHECK(c.gamma == doctest::Approx(std::sqrt(1.1 + std::tanh(30.0))).epsilon(1e-6));
        CHECK(c.beta < 1.0);
        CHECK(c.gamma > 1.0);
    }
}

TEST_CASE("theorem 1 envelope") {
    SUBCASE("free problem collapses the sandwich") {
        const BoundCoefficients c{0.0, 0.0, 1.0, 1.0, 17.0, 1.0};
        const Theorem1Envelope env = theorem1_envelope(c);
        CHECK(env.applicable);
        const double ap = alpha_phi_closed_form(17.0, 1.0);
        CHECK(env.lower == doctest::Approx(ap));
        CHECK(env.upper == doctest::Approx(ap));
    }
    SUBCASE("assumption violation yields no envelope") {
        const BoundCoefficients c{1.5, 0.2, 1.0, 1.0, 0.1, 1.0};
        const Theorem1Envelope env = theorem1_envelope(c);
        CHECK_FALSE(env.applicable);
        CHECK(std::isnan(env.lower));
    }
    SUBCASE("applicability around the unit-norm threshold") {
        const QNorms norms{1.0, 1.0, 1.0};
        CHECK(theorem1_envelope(bound_coefficients_raw(1.0, norms, 0.75)).applicable);
        CHECK_FALSE(theorem1_envelope(bound_coefficients_raw(1.0, norms, 0.72)).applicable);
    }
    SUBCASE("lower bound ratio is nondecreasing in lambda") {
        const QNorms norms{1.0, 1.0, 1.0};
        double prev = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double lambda = 0.75 + i * (1e4 - 0.75) / 2000.0;
            const BoundCoefficients c = bound_coefficients_raw(1.0, norms, lambda);
            const double lo = (1.0 - c.b) / (1.0 + c.a);
            const double ratio = lo * lo * lo * lo;
            CHECK(ratio >= prev - 1e-12);
            prev = ratio;
        }
    }
}

TEST_CASE("assumption threshold") {
    SUBCASE("zero norms") { CHECK(assumption_threshold(1.0, {0.0, 0.0, 0.0}) == 0.0); }
    SUBCASE("unit norms, frozen oracle") {
        CHECK(assumption_threshold(1.0, {1.0, 1.0, 1.0}) ==
              doctest::Approx(0.7366149174018748).epsilon(1e-4));
    }
    SUBCASE("closed-form inversion when only the sup norm is active") {
        CHECK(assumption_threshold(1.0, {4.0, 0.0, 0.0}) == doctest::Approx(4.0).epsilon(1e-5));
    }
}

TEST_CASE("theorem 2 envelope") {
    SUBCASE("leading constants with rate tags") {
        const Theorem2Envelope c0 = theorem2_envelope(Regime::c0, 100.0, 1.0, 1.0, 1.0, 0.0);
        CHECK(c0.lower == doctest::Approx(2.0 / 3.0));
        CHECK(c0.upper == doctest::Approx(2.0 / 3.0));
        CHECK(c0.rate_exponent == -0.5);
        const Theorem2Envelope c4 = theorem2_envelope(Regime::c4ac, 100.0, 1.0, 0.5, 2.0, 0.0);
        CHECK(c4.lower == doctest::Approx(0.5 * 2.0 / 3.0));
        CHECK(c4.upper == doctest::Approx(2.0 * 2.0 / 3.0));
        CHECK(c4.rate_exponent == -1.5);
    }
    SUBCASE("bv display at lambda = 100 with vanishing L1 norm") {
        const Theorem2Envelope bv = theorem2_envelope(Regime::bv, 100.0, 1.0, 1.0, 1.0, 0.0);
        CHECK(bv.lower == doctest::Approx(0.225 / 0.403125).epsilon(1e-12));
        CHECK(bv.rate_exponent == -1.0);
    }
    SUBCASE("bv denominator degenerates at small lambda") {
        CHECK_THROWS_AS(theorem2_envelope(Regime::bv, 0.25, 1.0, 1.0, 1.0, 1.0),
                        NegativeDenominator);
    }
}

TEST_CASE("pushforward alpha respects the norm bridge") {
    for (const char* name : {"laplacian", "fig1-tanh-metric", "setup2", "setup3"}) {
        const Problem prob = preset(name);
        const int n = prob.length() > 1.0 ? 4097 : 2049;
        const LiouvilleForm lf = transform(prob, n);
        const auto pairs = eigenpairs_normal_form(lf, 8);
        const BoundCoefficients c = bound_coefficients(lf, prob, 1.0);
        for (const auto& pair : pairs) {
            const double av = alpha(pair.values);
            const double ax = alpha(pushforward(pair.values, lf));
            CHECK(ax >= c.beta * av * (1.0 - 1e-6));
            CHECK(ax <= c.gamma * av * (1.0 + 1e-6));
        }
    }
}
