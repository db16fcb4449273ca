#include "slloc/interp.hpp"

#include <algorithm>
#include <cmath>

namespace slloc {

namespace {

void check_knots(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ValidationError("interpolation needs >= 2 matching (x, y) pairs");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ValidationError("interpolation abscissae must be strictly increasing");
}

// Index of the interval [xs[i], xs[i+1]] containing x (clamped).
int interval_of(const std::vector<double>& xs, double x) {
    if (x <= xs.front()) return 0;
    if (x >= xs.back()) return static_cast<int>(xs.size()) - 2;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    return static_cast<int>(it - xs.begin()) - 1;
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Shape-preserving one-sided slope for the boundary (Fritsch-Carlson edge rule).
double edge_slope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(m) != sign(d0))
        m = 0.0;
    else if (sign(d0) != sign(d1) && std::abs(m) > 3.0 * std::abs(d0))
        m = 3.0 * d0;
    return m;
}

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    check_knots(xs_, ys_);
    const int n = static_cast<int>(xs_.size());
    std::vector<double> h(n - 1), d(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        h[i] = xs_[i + 1] - xs_[i];
        d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    slopes_.assign(n, 0.0);
    if (n == 2) {
        slopes_[0] = slopes_[1] = d[0];
        return;
    }
    slopes_[0] = edge_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = edge_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    for (int i = 1; i < n - 1; ++i) {
        if (d[i - 1] * d[i] > 0.0) {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
}

double PchipInterpolant::operator()(double x) const {
    const int i = interval_of(xs_, x);
    const double h = xs_[i + 1] - xs_[i];
    const double t = std::clamp((x - xs_[i]) / h, 0.0, 1.0);
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] + h11 * h * slopes_[i + 1];
}

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    check_knots(xs_, ys_);
    const int n = static_cast<int>(xs_.size());
    m_.assign(n, 0.0);
    if (n == 2) return;
    // Symmetric tridiagonal system for interior second derivatives, natural ends.
    const int m = n - 2;
    std::vector<double> diag(m), off(std::max(0, m - 1)), rhs(m);
    for (int i = 1; i <= m; ++i) {
        const double hl = xs_[i] - xs_[i - 1];
        const double hr = xs_[i + 1] - xs_[i];
        diag[i - 1] = (hl + hr) / 3.0;
        if (i < m) off[i - 1] = hr / 6.0;
        rhs[i - 1] = (ys_[i + 1] - ys_[i]) / hr - (ys_[i] - ys_[i - 1]) / hl;
    }
    // Thomas sweep (system is SPD).
    std::vector<double> c(m), dnew(m);
    c[0] = m > 1 ? off[0] / diag[0] : 0.0;
    dnew[0] = rhs[0] / diag[0];
    for (int i = 1; i < m; ++i) {
        const double piv = diag[i] - off[i - 1] * c[i - 1];
        if (i < m - 1) c[i] = off[i] / piv;
        dnew[i] = (rhs[i] - off[i - 1] * dnew[i - 1]) / piv;
    }
    m_[m] = dnew[m - 1];
    for (int i = m - 1; i >= 1; --i) m_[i] = dnew[i - 1] - c[i - 1] * m_[i + 1];
}

double CubicSpline::operator()(double x) const {
    const int i = interval_of(xs_, x);
    const double h = xs_[i + 1] - xs_[i];
    const double xc = std::clamp(x, xs_.front(), xs_.back());
    const double A = (xs_[i + 1] - xc) / h;
    const double B = (xc - xs_[i]) / h;
    return A * ys_[i] + B * ys_[i + 1] +
           ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

}  // namespace slloc
