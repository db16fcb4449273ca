#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slloc/tridiag.hpp"

using namespace slloc;

namespace {

constexpr double kPi = std::numbers::pi;

// Dirichlet FD Laplacian on [0,1] with m interior nodes.
TridiagSystem fd_laplacian(int m) {
    const double h = 1.0 / (m + 1);
    TridiagSystem sys;
    sys.diag.assign(m, 2.0 / (h * h));
    sys.off.assign(m - 1, -1.0 / (h * h));
    return sys;
}

// Checks ||A v - lambda M v||_inf <= 1e-8 (|lambda| ||M v||_inf + ||A v||_inf).
bool residual_ok(const TridiagSystem& sys, double lambda, const std::vector<double>& v) {
    const int m = sys.order();
    double r = 0.0, av = 0.0, mv = 0.0;
    for (int i = 0; i < m; ++i) {
        const double mass = sys.mass_diag ? (*sys.mass_diag)[i] : 1.0;
        double a = sys.diag[i] * v[i];
        if (i > 0) a += sys.off[i - 1] * v[i - 1];
        if (i + 1 < m) a += sys.off[i] * v[i + 1];
        r = std::max(r, std::abs(a - lambda * mass * v[i]));
        av = std::max(av, std::abs(a));
        mv = std::max(mv, std::abs(mass * v[i]));
    }
    return r <= 1e-8 * (std::abs(lambda) * mv + av);
}

}  // namespace

TEST_CASE("thomas solve") {
    SUBCASE("identity") {
        TridiagSystem sys;
        sys.diag.assign(5, 1.0);
        sys.off.assign(4, 0.0);
        const std::vector<double> rhs = {1.0, -2.0, 3.0, 0.5, 4.0};
        CHECK(tridiag_solve(sys, rhs) == rhs);
    }
    SUBCASE("fd laplacian against the exact parabola") {
        const int m = 511;
        const double h = 1.0 / (m + 1);
        const TridiagSystem sys = fd_laplacian(m);
        const auto x = tridiag_solve(sys, std::vector<double>(m, 1.0));
        for (int i = 0; i < m; ++i) {
            const double xi = (i + 1) * h;
            CHECK(std::abs(x[i] - 0.5 * xi * (1.0 - xi)) < 1e-12);
        }
    }
    SUBCASE("zero pivot reports SingularPivot") {
        TridiagSystem sys;
        sys.diag = {1.0, 0.0, 1.0};
        sys.off = {0.0, 0.0};
        CHECK_THROWS_AS(tridiag_solve(sys, {1.0, 1.0, 1.0}), SingularPivot);
    }
    SUBCASE("solve then multiply reproduces rhs") {
        std::mt19937 gen(99);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            const int m = 40 + trial;
            TridiagSystem sys;
            sys.diag.resize(m);
            sys.off.resize(m - 1);
            for (int i = 0; i < m - 1; ++i) sys.off[i] = dist(gen);
            for (int i = 0; i < m; ++i) {
                const double row = (i > 0 ? std::abs(sys.off[i - 1]) : 0.0) +
                                   (i + 1 < m ? std::abs(sys.off[i]) : 0.0);
                sys.diag[i] = row + 1.0 + std::abs(dist(gen));
            }
            std::vector<double> rhs(m);
            for (double& v : rhs) v = dist(gen);
            const auto x = tridiag_solve(sys, rhs);
            double worst = 0.0, scale = 0.0;
            for (int i = 0; i < m; ++i) {
                double t = sys.diag[i] * x[i];
                if (i > 0) t += sys.off[i - 1] * x[i - 1];
                if (i + 1 < m) t += sys.off[i] * x[i + 1];
                worst = std::max(worst, std::abs(t - rhs[i]));
                scale = std::max(scale, std::abs(rhs[i]));
            }
            CHECK(worst <= 1e-10 * scale);
        }
    }
}

TEST_CASE("tridiagonal eigensolver") {
    SUBCASE("fd laplacian eigenvalues match the discrete formula") {
        const int m = 511;
        const double h = 1.0 / (m + 1);
        const auto eig = tridiag_eigs(fd_laplacian(m), 8);
        for (int k = 0; k < 8; ++k) {
            const double exact = 2.0 / (h * h) * (1.0 - std::cos((k + 1) * kPi * h));
            CHECK(std::abs(eig[k].value - exact) <= 1e-10 * exact);
        }
        // First eigenvalue sits below pi^2 by at most the h^2 pi^2 / 12 relative bound.
        const double rel = (kPi * kPi - eig[0].value) / (kPi * kPi);
        CHECK(rel > 0.0);
        CHECK(rel <= h * h * kPi * kPi / 12.0 * 1.0000001);
    }
    SUBCASE("eigenvectors are sines, orthonormal, with small residuals") {
        const int m = 255;
        const double h = 1.0 / (m + 1);
        const TridiagSystem sys = fd_laplacian(m);
        const auto eig = tridiag_eigs(sys, 5);
        for (int k = 0; k < 5; ++k) {
            double scale = 0.0;
            for (int i = 0; i < m; ++i) scale += std::pow(std::sin((k + 1) * kPi * (i + 1) * h), 2);
            scale = std::sqrt(scale);
            double worst = 0.0;
            for (int i = 0; i < m; ++i)
                worst = std::max(worst, std::abs(eig[k].vector[i] -
                                                 std::sin((k + 1) * kPi * (i + 1) * h) / scale));
            CHECK(worst < 1e-8);
            CHECK(residual_ok(sys, eig[k].value, eig[k].vector));
        }
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                double dot = 0.0;
                for (int i = 0; i < m; ++i) dot += eig[a].vector[i] * eig[b].vector[i];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
            }
    }
    SUBCASE("generalized problem: scaling the mass by 4 quarters the spectrum") {
        const int m = 127;
        TridiagSystem plain = fd_laplacian(m);
        TridiagSystem scaled = plain;
        scaled.mass_diag = std::vector<double>(m, 4.0);
        const auto e1 = tridiag_eigs(plain, 4);
        const auto e2 = tridiag_eigs(scaled, 4);
        for (int k = 0; k < 4; ++k) {
            CHECK(e2[k].value == doctest::Approx(e1[k].value / 4.0).epsilon(1e-12));
            // Same direction after renormalization, up to sign.
            double n1 = 0.0, n2 = 0.0, dot = 0.0;
            for (int i = 0; i < m; ++i) {
                n1 += e1[k].vector[i] * e1[k].vector[i];
                n2 += e2[k].vector[i] * e2[k].vector[i];
                dot += e1[k].vector[i] * e2[k].vector[i];
            }
            CHECK(std::abs(std::abs(dot) / std::sqrt(n1 * n2) - 1.0) < 1e-10);
        }
        // M-orthonormality in the scaled metric.
        double mdot = 0.0;
        for (int i = 0; i < m; ++i) mdot += e2[0].vector[i] * 4.0 * e2[0].vector[i];
        CHECK(std::abs(mdot - 1.0) < 1e-10);
    }
    SUBCASE("diagonal matrix with equal entries") {
        TridiagSystem sys;
        sys.diag.assign(6, 3.25);
        sys.off.assign(5, 0.0);
        const auto eig = tridiag_eigs(sys, 6);
        for (const auto& pair : eig) CHECK(pair.value == doctest::Approx(3.25).epsilon(1e-14));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                double dot = 0.0;
                for (int i = 0; i < 6; ++i) dot += eig[a].vector[i] * eig[b].vector[i];
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
            }
    }
    SUBCASE("count out of range") {
        CHECK_THROWS_AS(tridiag_eigs(fd_laplacian(8), 9), ValidationError);
        CHECK_THROWS_AS(tridiag_eigs(fd_laplacian(8), 0), ValidationError);
    }
    SUBCASE("random matrices satisfy the trace and Frobenius identities") {
        std::mt19937 gen(31337);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        for (int trial = 0; trial < 10; ++trial) {
            const int m = 30 + 5 * trial;
            TridiagSystem sys;
            sys.diag.resize(m);
            sys.off.resize(m - 1);
            for (double& v : sys.diag) v = dist(gen);
            for (double& v : sys.off) v = dist(gen);
            const auto eig = tridiag_eigs(sys, m);
            double tr = 0.0, fro = 0.0, sum = 0.0, sumsq = 0.0;
            for (int i = 0; i < m; ++i) {
                tr += sys.diag[i];
                fro += sys.diag[i] * sys.diag[i];
                sum += eig[i].value;
                sumsq += eig[i].value * eig[i].value;
                if (i > 0) CHECK(eig[i].value >= eig[i - 1].value);
                CHECK(residual_ok(sys, eig[i].value, eig[i].vector));
            }
            for (int i = 0; i + 1 < m; ++i) fro += 2.0 * sys.off[i] * sys.off[i];
            CHECK(sum == doctest::Approx(tr).epsilon(1e-11));
            CHECK(sumsq == doctest::Approx(fro).epsilon(1e-11));
            for (int a = 0; a < m; a += 7)
                for (int b = a; b < m; b += 5) {
                    double dot = 0.0;
                    for (int i = 0; i < m; ++i) dot += eig[a].vector[i] * eig[b].vector[i];
                    CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
                }
        }
    }
}
