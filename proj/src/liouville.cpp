#include "slloc/liouville.hpp"

#include <cmath>

#include "slloc/interp.hpp"

namespace slloc {

LiouvilleForm transform(const Problem& prob, int n) {
    if (n % 2 == 0) throw EvenNodeCount("transform requires an odd grid size");
    if (n < 65) throw ValidationError("transform requires n >= 65");

    const double L = prob.length();
    const Grid xgrid(0.0, L, n);
    const auto& p = prob.p();
    const auto& q = prob.q();
    const auto& w = prob.w();

    SampledFn g = sample(xgrid, [&](double x) { return std::sqrt(w.value(x) / p.value(x)); });
    SampledFn y = cumulative_integral(g);
    for (int i = 1; i < n; ++i)
        if (!(y.values[i] > y.values[i - 1]))
            throw InverseInterpolationFailure("y(x) lost strict monotonicity at node " +
                                              std::to_string(i));
    const double B = y.values.back();

    // Invert y(x) on the uniform y-grid; fall back to bisection on the
    // forward interpolant where the sampled inverse is not increasing.
    const Grid ygrid(0.0, B, n);
    std::vector<double> xnodes(n);
    for (int i = 0; i < n; ++i) xnodes[i] = xgrid.node(i);
    PchipInterpolant inverse(y.values, xnodes);
    std::vector<double> xofy(n);
    xofy[0] = 0.0;
    xofy[n - 1] = L;
    for (int j = 1; j + 1 < n; ++j) xofy[j] = inverse(ygrid.node(j));
    PchipInterpolant forward(xnodes, y.values);
    for (int j = 1; j < n; ++j) {
        if (xofy[j] > xofy[j - 1]) continue;
        double lo = xofy[j - 1], hi = L;
        const double target = ygrid.node(j);
        for (int it = 0; it < 200 && hi - lo > 1e-15 * L; ++it) {
            const double mid = 0.5 * (lo + hi);
            (forward(mid) < target ? lo : hi) = mid;
        }
        xofy[j] = 0.5 * (lo + hi);
        if (!(xofy[j] > xofy[j - 1]))
            throw InverseInterpolationFailure("x(y) inversion lost monotonicity at node " +
                                              std::to_string(j));
    }

    std::vector<double> fvals(n), qvals(n);
    const bool analytic = p.analytic_derivatives() && w.analytic_derivatives();
    for (int j = 0; j < n; ++j) {
        const double x = xofy[j];
        const double P = p.value(x), W = w.value(x);
        fvals[j] = std::pow(W * P, 0.25);
        qvals[j] = q.value(x) / W;
    }
    SampledFn f(ygrid, fvals);

    std::vector<double> Qv(n);
    if (analytic) {
        for (int j = 0; j < n; ++j) {
            const double x = xofy[j];
            const double P = p.value(x), W = w.value(x);
            const double P1 = p.deriv1(x), W1 = w.deriv1(x);
            const double P2 = p.deriv2(x), W2 = w.deriv2(x);
            const double G = W * P, G1 = W1 * P + W * P1, G2 = W2 * P + 2.0 * W1 * P1 + W * P2;
            const double F = std::pow(G, 0.25);
            const double F1 = G1 / (4.0 * std::pow(G, 0.75));
            const double F2 =
                G2 / (4.0 * std::pow(G, 0.75)) - 3.0 / 16.0 * G1 * G1 / std::pow(G, 1.75);
            const double r = std::sqrt(P / W);          // x'(y)
            const double r1 = (P1 * W - P * W1) / (2.0 * W * W * r);  // d/dx of x'(y)
            const double fpp = F2 * r * r + F1 * r1 * r;
            Qv[j] = fpp / F + qvals[j];
        }
    } else {
        SampledFn fpp = second_derivative(f);
        for (int j = 0; j < n; ++j) Qv[j] = fpp.values[j] / fvals[j] + qvals[j];
    }
    SampledFn Q(ygrid, Qv);

    LiouvilleForm lf;
    lf.problem_ = prob;
    lf.B_ = B;
    lf.y_of_x_ = std::move(y);
    lf.x_of_y_ = SampledFn(ygrid, std::move(xofy));
    lf.f_ = std::move(f);
    lf.Q_ = std::move(Q);
    lf.q_norms_ = QNorms{lp_norm(lf.Q_, Lp::sup), lp_norm(lf.Q_, Lp::four),
                         lp_norm(lf.Q_, Lp::one)};
    return lf;
}

SampledFn pushforward(const SampledFn& v, const LiouvilleForm& lf) {
    if (!(v.grid == lf.Q().grid))
        throw ValidationError("pushforward input must live on the transform's y-grid");
    const auto& yx = lf.y_of_x();
    const int n = yx.grid.n;
    std::vector<double> ynodes(v.grid.n);
    for (int j = 0; j < v.grid.n; ++j) ynodes[j] = v.grid.node(j);
    CubicSpline vy(std::move(ynodes), v.values);

    const auto& p = lf.problem().p();
    const auto& w = lf.problem().w();
    std::vector<double> phi(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        const double x = yx.grid.node(i);
        const double fx = std::pow(w.value(x) * p.value(x), 0.25);  // f(y(x)) exactly
        phi[i] = vy(yx.values[i]) / fx;
    }
    return SampledFn(yx.grid, std::move(phi));
}

}  // namespace slloc
