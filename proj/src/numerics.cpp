#include "slloc/numerics.hpp"

#include <cmath>
#include <string>

namespace slloc {

Grid::Grid(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
    if (!(b > a)) throw BadInterval("grid requires b > a");
    if (n < 3) throw TooFewNodes("grid requires at least 3 nodes, got " + std::to_string(n));
}

SampledFn::SampledFn(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.n)
        throw ValidationError("sample count does not match grid size");
    for (double x : values)
        if (!std::isfinite(x)) throw ValidationError("sampled function has a non-finite value");
}

SampledFn sample(const Grid& g, const std::function<double(double)>& f) {
    std::vector<double> v(g.n);
    for (int i = 0; i < g.n; ++i) v[i] = f(g.node(i));
    return SampledFn(g, std::move(v));
}

double integrate(const SampledFn& f) {
    const int n = f.grid.n;
    if (n % 2 == 0) throw EvenNodeCount("Simpson integration requires an odd node count");
    const auto& v = f.values;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n - 1; i += 2) odd += v[i];
    for (int i = 2; i < n - 1; i += 2) even += v[i];
    return f.grid.h() / 3.0 * (v[0] + v[n - 1] + 4.0 * odd + 2.0 * even);
}

SampledFn cumulative_integral(const SampledFn& f) {
    const int n = f.grid.n;
    if (n % 2 == 0) throw EvenNodeCount("cumulative Simpson requires an odd node count");
    const double h = f.grid.h();
    const auto& v = f.values;
    std::vector<double> out(n, 0.0);
    // Per node pair: quadratic through (k, k+1, k+2); the two half-step rules
    // sum exactly to the Simpson pair rule.
    for (int k = 0; k + 2 < n; k += 2) {
        out[k + 1] = out[k] + h * (5.0 * v[k] + 8.0 * v[k + 1] - v[k + 2]) / 12.0;
        out[k + 2] = out[k] + h * (v[k] + 4.0 * v[k + 1] + v[k + 2]) / 3.0;
    }
    return SampledFn(f.grid, std::move(out));
}

double lp_norm(const SampledFn& f, Lp t) {
    const auto& v = f.values;
    switch (t) {
        case Lp::sup: {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        }
        case Lp::one: {
            std::vector<double> a(v.size());
            for (size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]);
            return integrate(SampledFn(f.grid, std::move(a)));
        }
        case Lp::two: {
            std::vector<double> a(v.size());
            for (size_t i = 0; i < v.size(); ++i) a[i] = v[i] * v[i];
            return std::sqrt(integrate(SampledFn(f.grid, std::move(a))));
        }
        case Lp::four: {
            std::vector<double> a(v.size());
            for (size_t i = 0; i < v.size(); ++i) {
                const double s = v[i] * v[i];
                a[i] = s * s;
            }
            return std::pow(integrate(SampledFn(f.grid, std::move(a))), 0.25);
        }
    }
    throw ValidationError("unsupported Lp exponent");
}

SampledFn second_derivative(const SampledFn& f) {
    const int n = f.grid.n;
    if (n < 5) throw TooFewNodes("second_derivative requires at least 5 nodes");
    const double h2 = f.grid.h() * f.grid.h();
    const auto& v = f.values;
    std::vector<double> d(n);
    d[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / h2;
    for (int i = 1; i < n - 1; ++i) d[i] = (v[i - 1] - 2.0 * v[i] + v[i + 1]) / h2;
    d[n - 1] = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / h2;
    return SampledFn(f.grid, std::move(d));
}

}  // namespace slloc
