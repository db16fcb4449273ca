#include "slloc/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slloc {

double alpha(const SampledFn& u) {
    const double n4 = lp_norm(u, Lp::four);
    if (n4 == 0.0) throw ZeroFunction("alpha of the zero function is undefined");
    const double n2 = lp_norm(u, Lp::two);
    const double r = n2 / n4;
    return r * r * r * r;
}

double alpha_phi_closed_form(double lambda, double B) {
    if (!(lambda > 0.0) || !(B > 0.0))
        throw ValidationError("alpha_phi_closed_form needs lambda > 0 and B > 0");
    const double k = std::sqrt(lambda);
    const double s = std::sin(k * B);
    const double c = std::cos(k * B);
    const double num = B * B / 4.0 + c * c / (4.0 * lambda) - B * c * s / (2.0 * k) -
                       c * c * c * c / (4.0 * lambda);
    const double den = 3.0 * B / 8.0 + c * c * c * s / (4.0 * k) - 5.0 * c * s / (8.0 * k);
    if (std::abs(den) <= 1e-12 * (3.0 * B / 8.0))
        throw DegenerateDenominator("alpha_phi denominator underflows at lambda = " +
                                    std::to_string(lambda));
    return num / den;
}

BoundCoefficients bound_coefficients_raw(double B, const QNorms& norms, double lambda) {
    if (!(lambda > 0.0)) throw ValidationError("bound coefficients need lambda > 0");
    BoundCoefficients c;
    c.lambda = lambda;
    c.B = B;
    const double rl = std::sqrt(lambda);
    c.a = B * norms.sup / (2.0 * rl);
    c.b = std::pow(B * B * B / 12.0 + 5.0 * B / (32.0 * lambda) +
                       5.0 / (32.0 * std::pow(lambda, 1.5)),
                   0.25) *
          norms.l4 / rl;
    return c;
}

BoundCoefficients bound_coefficients(const LiouvilleForm& lf, const Problem& prob,
                                     double lambda) {
    BoundCoefficients c = bound_coefficients_raw(lf.B(), lf.q_norms(), lambda);

    // beta = ||w||^-2 ||p^{-1/2} w^{-3/2}||^-1, gamma = ||w^{-1}||^2 ||p^{1/2} w^{3/2}||,
    // sup-norms taken over the problem's audit grid.
    const int m = prob.audit_points();
    const double L = prob.length();
    double w_sup = 0.0, winv_sup = 0.0, mix_minus = 0.0, mix_plus = 0.0;
    for (int i = 0; i < m; ++i) {
        const double x = L * i / (m - 1);
        const double pv = prob.p().value(x), wv = prob.w().value(x);
        w_sup = std::max(w_sup, wv);
        winv_sup = std::max(winv_sup, 1.0 / wv);
        mix_minus = std::max(mix_minus, 1.0 / (std::sqrt(pv) * wv * std::sqrt(wv)));
        mix_plus = std::max(mix_plus, std::sqrt(pv) * wv * std::sqrt(wv));
    }
    c.beta = 1.0 / (w_sup * w_sup * mix_minus);
    c.gamma = winv_sup * winv_sup * mix_plus;
    if (!(c.beta <= c.gamma * (1.0 + 1e-12)))
        throw ValidationError("norm-bridge constants crossed: beta > gamma");
    return c;
}

Theorem1Envelope theorem1_envelope(const BoundCoefficients& coeffs) {
    Theorem1Envelope env;
    env.applicable = coeffs.a < 1.0 && coeffs.b < 1.0;
    if (!env.applicable) {
        env.lower = env.upper = std::numeric_limits<double>::quiet_NaN();
        return env;
    }
    const double alpha_phi = alpha_phi_closed_form(coeffs.lambda, coeffs.B);
    const double lo = (1.0 - coeffs.b) / (1.0 + coeffs.a);
    const double hi = (1.0 + coeffs.b) / (1.0 - coeffs.a);
    env.lower = coeffs.beta * lo * lo * lo * lo * alpha_phi;
    env.upper = coeffs.gamma * hi * hi * hi * hi * alpha_phi;
    return env;
}

double assumption_threshold(double B, const QNorms& norms) {
    if (norms.sup < 0.0 || norms.l4 < 0.0) throw ValidationError("norms must be nonnegative");
    if (norms.sup == 0.0 && norms.l4 == 0.0) return 0.0;
    auto violated = [&](double lambda) {
        const BoundCoefficients c = bound_coefficients_raw(B, norms, lambda);
        return c.a >= 1.0 || c.b >= 1.0;
    };
    double hi = 1.0;
    while (violated(hi)) {
        hi *= 2.0;
        if (hi > 1e30) throw NumericalError("assumption threshold exceeds 1e30");
    }
    double lo = hi * 0.5;
    while (lo > 1e-30 && !violated(lo)) lo *= 0.5;
    if (lo <= 1e-30) return 0.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (violated(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Theorem2Envelope theorem2_envelope(Regime regime, double lambda, double B, double beta,
                                   double gamma, double l1_norm_q) {
    if (!(lambda > 0.0) || !(B > 0.0))
        throw ValidationError("theorem2_envelope needs lambda > 0 and B > 0");
    Theorem2Envelope env;
    env.regime = regime;
    if (regime == Regime::c0 || regime == Regime::c4ac) {
        env.lower = beta * 2.0 * B / 3.0;
        env.upper = gamma * 2.0 * B / 3.0;
        env.rate_exponent = regime == Regime::c0 ? -0.5 : -1.5;
        return env;
    }
    const double rl = std::sqrt(lambda);
    const double cnum = B * (0.25 + l1_norm_q * B) / rl;
    const double cden = (9.0 / 32.0 + 2.0 * l1_norm_q * B) / rl;
    const double d_minus = 3.0 * B / 8.0 - cden;
    if (d_minus <= 0.0)
        throw NegativeDenominator("asymptotic envelope denominator is not positive at lambda = " +
                                  std::to_string(lambda));
    env.lower = beta * (B * B / 4.0 - cnum) / (3.0 * B / 8.0 + cden);
    env.upper = gamma * (B * B / 4.0 + cnum) / d_minus;
    env.rate_exponent = -1.0;
    return env;
}

}  // namespace slloc
