#include "slloc/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace slloc {

namespace {

// Wrap an interior-node eigenvector into a full-grid eigenfunction,
// renormalized so that integrate(phi^2 * weight) == 1, first lobe positive.
EigenPair assemble_pair(int index, double lambda, const Grid& grid,
                        const std::vector<double>& interior,
                        const std::function<double(double)>& weight, Coordinate coord) {
    const int n = grid.n;
    std::vector<double> phi(n, 0.0);
    for (int i = 0; i + 2 < n; ++i) phi[i + 1] = interior[i];

    std::vector<double> integrand(n);
    for (int i = 0; i < n; ++i) integrand[i] = phi[i] * phi[i] * weight(grid.node(i));
    const double norm = std::sqrt(integrate(SampledFn(grid, std::move(integrand))));

    double peak = 0.0;
    for (double x : phi) peak = std::max(peak, std::abs(x));
    double flip = 1.0;
    for (int i = 0; i < n; ++i) {
        if (std::abs(phi[i]) > 1e-12 * peak) {
            flip = phi[i] < 0.0 ? -1.0 : 1.0;
            break;
        }
    }
    for (double& x : phi) x = flip * x / norm;

    EigenPair pair;
    pair.index = index;
    pair.lambda = lambda;
    pair.values = SampledFn(grid, std::move(phi));
    pair.coordinate = coord;
    pair.normalization = Normalization::unit_l2_weighted;
    return pair;
}

}  // namespace

TridiagSystem direct_discretization(const Problem& prob, const Grid& xgrid) {
    const int n = xgrid.n;
    const int m = n - 2;
    const double h = xgrid.h();
    const auto& p = prob.p();
    const auto& q = prob.q();
    const auto& w = prob.w();

    std::vector<double> phalf(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        phalf[i] = p.value(0.5 * (xgrid.node(i) + xgrid.node(i + 1)));

    TridiagSystem sys;
    sys.diag.resize(m);
    sys.off.resize(m - 1);
    std::vector<double> mass(m);
    for (int i = 0; i < m; ++i) {
        const double x = xgrid.node(i + 1);
        sys.diag[i] = (phalf[i] + phalf[i + 1]) / (h * h) + q.value(x);
        mass[i] = w.value(x);
    }
    for (int i = 0; i + 1 < m; ++i) sys.off[i] = -phalf[i + 1] / (h * h);
    sys.mass_diag = std::move(mass);
    return sys;
}

std::vector<EigenPair> eigenpairs_direct(const Problem& prob, int n_modes, int n) {
    if (n % 2 == 0) throw EvenNodeCount("eigenpairs_direct requires an odd grid size");
    if (n < 5) throw TooFewNodes("eigenpairs_direct requires n >= 5");
    if (n_modes < 1 || n_modes > n - 2)
        throw ValidationError("n_modes must lie in [1, n-2]");

    const Grid xgrid(0.0, prob.length(), n);
    const TridiagSystem sys = direct_discretization(prob, xgrid);
    const auto eig = tridiag_eigs(sys, n_modes);

    const auto& w = prob.w();
    std::vector<EigenPair> out;
    out.reserve(n_modes);
    for (int k = 0; k < n_modes; ++k)
        out.push_back(assemble_pair(k + 1, eig[k].value, xgrid, eig[k].vector,
                                    [&](double x) { return w.value(x); }, Coordinate::x));
    return out;
}

std::vector<EigenPair> eigenpairs_normal_form(const LiouvilleForm& lf, int n_modes) {
    const Grid& ygrid = lf.Q().grid;
    const int n = ygrid.n;
    if (n_modes < 1 || n_modes > n - 2)
        throw ValidationError("n_modes must lie in [1, n-2]");
    const double h = ygrid.h();
    const int m = n - 2;

    TridiagSystem sys;
    sys.diag.resize(m);
    sys.off.assign(m - 1, -1.0 / (h * h));
    for (int i = 0; i < m; ++i) sys.diag[i] = 2.0 / (h * h) + lf.Q().values[i + 1];

    const auto eig = tridiag_eigs(sys, n_modes);
    std::vector<EigenPair> out;
    out.reserve(n_modes);
    for (int k = 0; k < n_modes; ++k)
        out.push_back(assemble_pair(k + 1, eig[k].value, ygrid, eig[k].vector,
                                    [](double) { return 1.0; }, Coordinate::y));
    return out;
}

SpectrumReport cross_validate(const Problem& prob, int n_modes, int n) {
    const LiouvilleForm lf = transform(prob, n);
    auto direct = eigenpairs_direct(prob, n_modes, n);
    const auto normal = eigenpairs_normal_form(lf, n_modes);

    const auto& w = prob.w();
    const Grid& xgrid = direct.front().values.grid;
    SpectrumReport report;
    report.route = "direct";  // the carried pairs; deltas witness the normal-form run
    report.grid_size = n;
    report.deltas.resize(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        report.deltas[k].lambda_rel =
            std::abs(direct[k].lambda - normal[k].lambda) / std::abs(direct[k].lambda);

        SampledFn mapped = pushforward(normal[k].values, lf);
        std::vector<double> integrand(n);
        for (int i = 0; i < n; ++i)
            integrand[i] = mapped.values[i] * mapped.values[i] * w.value(xgrid.node(i));
        const double norm = std::sqrt(integrate(SampledFn(xgrid, std::move(integrand))));
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += mapped.values[i] * direct[k].values.values[i];
        const double flip = dot < 0.0 ? -1.0 : 1.0;
        double sup = 0.0;
        for (int i = 0; i < n; ++i)
            sup = std::max(sup, std::abs(flip * mapped.values[i] / norm -
                                         direct[k].values.values[i]));
        report.deltas[k].eigenfunction_sup = sup;
    }
    report.pairs = std::move(direct);
    return report;
}

SampledFn apply_kq(const SampledFn& Q, double lambda, const SampledFn& u) {
    if (!(Q.grid == u.grid)) throw ValidationError("apply_kq needs Q and u on the same grid");
    if (!(lambda > 0.0)) throw ValidationError("apply_kq needs lambda > 0");
    const int n = Q.grid.n;
    const double h = Q.grid.h();
    const double k = std::sqrt(lambda);

    // sin(sqrt(lambda) (y_j - y_i)) depends only on j - i on a uniform grid.
    std::vector<double> sin_table(n);
    for (int d = 0; d < n; ++d) sin_table[d] = std::sin(k * h * d);
    std::vector<double> qu(n);
    for (int i = 0; i < n; ++i) qu[i] = Q.values[i] * u.values[i];

    std::vector<double> out(n, 0.0);
    for (int j = 1; j < n; ++j) {
        const int panels = j % 2 == 0 ? j : j - 1;
        double acc = 0.0;
        if (panels >= 2) {
            double odd = 0.0, even = 0.0;
            for (int i = 1; i < panels; i += 2) odd += qu[i] * sin_table[j - i];
            for (int i = 2; i < panels; i += 2) even += qu[i] * sin_table[j - i];
            acc = h / 3.0 *
                  (qu[0] * sin_table[j] + qu[panels] * sin_table[j - panels] + 4.0 * odd +
                   2.0 * even);
        }
        if (panels < j)  // trapezoid on the final subinterval
            acc += h / 2.0 * (qu[j - 1] * sin_table[1] + qu[j] * sin_table[0]);
        out[j] = acc;
    }
    return SampledFn(Q.grid, std::move(out));
}

KqBounds kq_norm_bounds(double B, double lambda, const QNorms& norms) {
    if (!(lambda > 0.0)) throw ValidationError("kq_norm_bounds needs lambda > 0");
    KqBounds b;
    b.l2 = B * norms.sup / 2.0;
    b.l4 = std::pow(B * B * B / 12.0 + 5.0 * B / (32.0 * lambda) +
                        5.0 / (32.0 * std::pow(lambda, 1.5)),
                    0.25) *
           norms.l4;
    return b;
}

}  // namespace slloc
