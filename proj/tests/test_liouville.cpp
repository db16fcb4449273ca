#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slloc/interp.hpp"
#include "slloc/liouville.hpp"
#include "slloc/spectral.hpp"

using namespace slloc;

namespace {
constexpr double kPi = std::numbers::pi;
// High-resolution quadrature oracle value of B for the fig1 metric,
// frozen from an independent adaptive integration of (tanh(40x-10)+1.1)^(-1/2).
constexpr double kB_fig1 = 1.2355190315205809;
}  // namespace

TEST_CASE("identity transform for the laplacian") {
    const LiouvilleForm lf = transform(preset("laplacian"), 257);
    CHECK(lf.B() == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 257; ++i) {
        CHECK(std::abs(lf.y_of_x().values[i] - lf.y_of_x().grid.node(i)) < 1e-12);
        CHECK(std::abs(lf.f().values[i] - 1.0) < 1e-12);
        CHECK(std::abs(lf.Q().values[i]) < 1e-10);
    }
    CHECK(lf.q_norms().sup < 1e-10);
}

TEST_CASE("constant coefficients collapse to a scaled interval") {
    // p = 4 on [0, 2]: y = x/2, B = 1, f = sqrt(2), Q = 0.
    const Problem prob = make_problem(2.0, CoefficientFn::constant(4.0),
                                      CoefficientFn::constant(0.0), CoefficientFn::constant(1.0));
    const LiouvilleForm lf = transform(prob, 257);
    CHECK(lf.B() == doctest::Approx(1.0).epsilon(1e-13));
    for (int i = 0; i < 257; ++i) {
        CHECK(std::abs(lf.f().values[i] - std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(lf.Q().values[i]) < 1e-10);
    }
}

TEST_CASE("fig1 transformed length matches the frozen oracle") {
    const LiouvilleForm lf = transform(preset("fig1-tanh-metric"), 4097);
    CHECK(std::abs(lf.B() - kB_fig1) < 1e-9);
}

TEST_CASE("B is stable under grid refinement") {
    for (const char* name : {"fig1-tanh-metric", "setup2"}) {
        const double b1 = transform(preset(name), 1025).B();
        const double b2 = transform(preset(name), 2049).B();
        CHECK(std::abs(b1 - b2) <= 1e-8);
    }
}

TEST_CASE("composition of the maps is the identity") {
    for (const char* name : {"fig1-tanh-metric", "setup2", "setup3"}) {
        const Problem prob = preset(name);
        const LiouvilleForm lf = transform(prob, 4097);
        // Interpolate the stored x(y) table at y(x_i) and compare against x_i.
        const auto& xy = lf.x_of_y();
        std::vector<double> ynodes(xy.grid.n);
        for (int j = 0; j < xy.grid.n; ++j) ynodes[j] = xy.grid.node(j);
        const PchipInterpolant read_back(ynodes, xy.values);
        double worst = 0.0;
        for (int i = 0; i < 4097; i += 7) {
            const double y = lf.y_of_x().values[i];
            worst = std::max(worst, std::abs(read_back(y) - lf.y_of_x().grid.node(i)));
        }
        CHECK(worst < 1e-8 * prob.length() + 1e-8);
    }
}

TEST_CASE("Q jump sizes halve under grid doubling") {
    auto max_jump = [](const SampledFn& q) {
        double m = 0.0;
        for (size_t i = 1; i < q.values.size(); ++i)
            m = std::max(m, std::abs(q.values[i] - q.values[i - 1]));
        return m;
    };
    const Problem prob = preset("fig1-tanh-metric");
    const double j1 = max_jump(transform(prob, 1025).Q());
    const double j2 = max_jump(transform(prob, 2049).Q());
    const double j3 = max_jump(transform(prob, 4097).Q());
    CHECK(j2 / j1 < 0.6);
    CHECK(j3 / j2 < 0.6);
}

TEST_CASE("q_norms of a sine potential") {
    // p = w = 1, q = sin(pi x) makes Q(y) = sin(pi y) exactly.
    auto q = CoefficientFn::closed_form(
        "", [](double x) { return std::sin(kPi * x); },
        [](double x) { return kPi * std::cos(kPi * x); },
        [](double x) { return -kPi * kPi * std::sin(kPi * x); });
    const Problem prob = make_problem(1.0, CoefficientFn::constant(1.0), q,
                                      CoefficientFn::constant(1.0));
    const LiouvilleForm lf = transform(prob, 4097);
    CHECK(std::abs(lf.q_norms().sup - 1.0) < 1e-4);
    CHECK(std::abs(lf.q_norms().l4 - std::pow(3.0 / 8.0, 0.25)) < 1e-6);
    CHECK(std::abs(lf.q_norms().l1 - 2.0 / kPi) < 1e-6);
}

TEST_CASE("pushforward") {
    SUBCASE("identity transform only resamples") {
        const LiouvilleForm lf = transform(preset("laplacian"), 257);
        const SampledFn v = sample(lf.Q().grid, [](double y) { return std::sin(kPi * y); });
        const SampledFn phi = pushforward(v, lf);
        double worst = 0.0;
        for (int i = 0; i < 257; ++i)
            worst = std::max(worst, std::abs(phi.values[i] - v.values[i]));
        CHECK(worst < 1e-9);
    }
    SUBCASE("zero maps to zero") {
        const LiouvilleForm lf = transform(preset("laplacian"), 257);
        const SampledFn v(lf.Q().grid, std::vector<double>(257, 0.0));
        for (double x : pushforward(v, lf).values) CHECK(x == 0.0);
    }
    SUBCASE("constant-coefficient map is v(x/2)/sqrt(2)") {
        const Problem prob = make_problem(2.0, CoefficientFn::constant(4.0),
                                          CoefficientFn::constant(0.0),
                                          CoefficientFn::constant(1.0));
        const LiouvilleForm lf = transform(prob, 513);
        const SampledFn v = sample(lf.Q().grid, [](double y) { return std::sin(kPi * y); });
        const SampledFn phi = pushforward(v, lf);
        double worst = 0.0;
        for (int i = 1; i + 1 < 513; ++i) {
            const double x = phi.grid.node(i);
            worst = std::max(worst,
                             std::abs(phi.values[i] - std::sin(kPi * x / 2.0) / std::sqrt(2.0)));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("tabulated coefficients take the finite-difference route for Q") {
    // The same smooth monotone metric twice: a closed form with analytic
    // derivatives and a dense tabulation that must fall back to
    // differencing f. (Monotone data is the representative case; the
    // shape-preserving interpolant deliberately flattens slopes near data
    // extrema, which Q = f''/f would amplify.)
    auto pfun = [](double x) { return std::exp(x); };
    auto p_analytic = CoefficientFn::closed_form("", pfun, pfun, pfun);
    std::vector<double> xs, vs;
    for (int i = 0; i <= 512; ++i) {
        xs.push_back(i / 512.0);
        vs.push_back(pfun(xs.back()));
    }
    const Problem analytic = make_problem(1.0, p_analytic, CoefficientFn::constant(0.0),
                                          CoefficientFn::constant(1.0));
    const Problem tabulated = make_problem(1.0, CoefficientFn::tabulated(xs, vs),
                                           CoefficientFn::constant(0.0),
                                           CoefficientFn::constant(1.0));
    const LiouvilleForm la = transform(analytic, 1025);
    const LiouvilleForm lt = transform(tabulated, 1025);
    CHECK(la.B() == doctest::Approx(lt.B()).epsilon(1e-8));
    double worst = 0.0;
    for (int j = 0; j < 1025; ++j)
        worst = std::max(worst, std::abs(la.Q().values[j] - lt.Q().values[j]));
    CHECK(worst < 5e-2 * (la.q_norms().sup + 1.0));
    // The two builds must agree on the spectrum far better than that.
    const auto ea = eigenpairs_normal_form(la, 5);
    const auto et = eigenpairs_normal_form(lt, 5);
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(ea[k].lambda - et[k].lambda) <= 1e-3 * ea[k].lambda);
}

TEST_CASE("transform input validation") {
    CHECK_THROWS_AS(transform(preset("laplacian"), 256), EvenNodeCount);
    CHECK_THROWS_AS(transform(preset("laplacian"), 63), ValidationError);
}
