#include "slloc/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slloc/tridiag.hpp"

namespace slloc {

namespace {

// One reusable Thomas factorization; the system is k-independent across
// the landscape iteration.
struct ThomasFactor {
    std::vector<double> c, piv;

    explicit ThomasFactor(const TridiagSystem& sys) {
        const int m = sys.order();
        c.assign(std::max(0, m - 1), 0.0);
        piv.assign(m, 0.0);
        piv[0] = sys.diag[0];
        check(sys, 0, piv[0]);
        if (m > 1) c[0] = sys.off[0] / piv[0];
        for (int i = 1; i < m; ++i) {
            piv[i] = sys.diag[i] - sys.off[i - 1] * c[i - 1];
            check(sys, i, piv[i]);
            if (i + 1 < m) c[i] = sys.off[i] / piv[i];
        }
    }

    static void check(const TridiagSystem& sys, int i, double p) {
        const int m = sys.order();
        const double scale = std::abs(sys.diag[i]) + (i > 0 ? std::abs(sys.off[i - 1]) : 0.0) +
                             (i + 1 < m ? std::abs(sys.off[i]) : 0.0);
        if (std::abs(p) <= 1e-14 * scale)
            throw SingularPivot("tridiagonal pivot vanished at row " + std::to_string(i));
    }

    std::vector<double> solve(const TridiagSystem& sys, const std::vector<double>& rhs) const {
        const int m = sys.order();
        std::vector<double> x(m);
        x[0] = rhs[0] / piv[0];
        for (int i = 1; i < m; ++i) x[i] = (rhs[i] - sys.off[i - 1] * x[i - 1]) / piv[i];
        for (int i = m - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
        return x;
    }
};

double weighted_l2_norm(const SampledFn& f, const Problem& prob) {
    const int n = f.grid.n;
    std::vector<double> integrand(n);
    for (int i = 0; i < n; ++i) {
        const double v = f.values[i];
        integrand[i] = v * v * prob.w().value(f.grid.node(i));
    }
    return std::sqrt(integrate(SampledFn(f.grid, std::move(integrand))));
}

SampledFn embed_interior(const Grid& grid, const std::vector<double>& interior) {
    std::vector<double> full(grid.n, 0.0);
    for (size_t i = 0; i < interior.size(); ++i) full[i + 1] = interior[i];
    return SampledFn(grid, std::move(full));
}

void check_interior_positive(const std::vector<double>& interior, int k) {
    for (double v : interior)
        if (!(v > 0.0))
            throw NonPositiveLandscape("landscape iterate k=" + std::to_string(k) +
                                       " is not positive in the interior");
}

// Runs the solve chain ell_{j} = T^{-1} ell_{j-1} starting from 1, with an
// optional per-solve scale divisor (the generalized variant's t).
LandscapeIterate iterate_impl(const Problem& prob, int k, int n, std::optional<double> t,
                              bool normalize) {
    if (k < 1) throw ValidationError("iteration count k must be >= 1");
    if (n % 2 == 0) throw EvenNodeCount("landscape solves require an odd grid size");
    if (n < 5) throw TooFewNodes("landscape solves require n >= 5");
    if (t && !(*t > 0.0)) throw ValidationError("time scale t must be positive");

    const Grid xgrid(0.0, prob.length(), n);
    const TridiagSystem sys = direct_discretization(prob, xgrid);
    const ThomasFactor factor(sys);
    const int m = sys.order();
    const auto& mass = *sys.mass_diag;

    std::vector<double> u(m, 1.0);
    for (int j = 0; j < k; ++j) {
        std::vector<double> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = mass[i] * u[i];
        u = factor.solve(sys, rhs);
        if (t)
            for (double& x : u) x /= *t;
    }
    if (!t) check_interior_positive(u, k);

    LandscapeIterate it;
    it.k = k;
    it.t = t;
    it.values = embed_interior(xgrid, u);
    it.raw_norm = weighted_l2_norm(it.values, prob);
    if (normalize) {
        if (!(it.raw_norm > 0.0)) throw NonPositiveLandscape("landscape iterate has zero norm");
        for (double& x : it.values.values) x /= it.raw_norm;
        it.normalized = true;
    }
    return it;
}

}  // namespace

LandscapeIterate landscape(const Problem& prob, int n) {
    return iterate_impl(prob, 1, n, std::nullopt, false);
}

LandscapeIterate iterated_landscape(const Problem& prob, int k, int n) {
    return iterate_impl(prob, k, n, std::nullopt, true);
}

LandscapeIterate generalized_landscape(const Problem& prob, int k, double t, int n) {
    return iterate_impl(prob, k, n, t, false);
}

ProjectionOfOne projection_of_one(const std::vector<EigenPair>& pairs, int j) {
    if (j < 1 || j > static_cast<int>(pairs.size()))
        throw IndexOutOfRange("eigenpair index " + std::to_string(j) + " is out of range");
    const EigenPair& pair = pairs[j - 1];
    ProjectionOfOne proj;
    proj.j = j;
    proj.coefficient = integrate(pair.values);
    proj.norm = std::abs(proj.coefficient);
    std::vector<double> vals(pair.values.values);
    for (double& v : vals) v *= proj.coefficient;
    proj.values = SampledFn(pair.values.grid, std::move(vals));
    return proj;
}

double prop1_bound(double lambda1, double lambda2, double L, double p1_norm, int k) {
    if (k < 1) throw ValidationError("prop1_bound needs k >= 1");
    if (!(p1_norm > 0.0)) throw ValidationError("prop1_bound needs ||P_1 1|| > 0");
    if (!(lambda1 > 0.0)) throw ValidationError("prop1_bound needs lambda1 > 0");
    if (!(lambda1 < lambda2))
        throw DegenerateGap("prop1_bound needs lambda1 < lambda2");
    return 2.0 * std::sqrt(lambda1) * L / p1_norm * std::pow(lambda1 / lambda2, k - 0.5);
}

double prop2_bound(double L, double t, double lambda_next, int k) {
    if (k < 1) throw ValidationError("prop2_bound needs k >= 1");
    if (!(t > 0.0)) throw ValidationError("prop2_bound needs t > 0");
    if (!(t * lambda_next > 1.0))
        throw OutOfWindow("prop2_bound needs t * lambda_{n0+1} > 1");
    return L / std::sqrt(t) * std::pow(t * lambda_next, -(k - 0.5));
}

double prop2_residual(const std::vector<EigenPair>& pairs, double t, int k, int n0, int j_max) {
    if (k < 1 || n0 < 1) throw ValidationError("prop2_residual needs k >= 1 and n0 >= 1");
    if (j_max <= n0) throw ValidationError("prop2_residual needs j_max > n0");
    if (j_max > static_cast<int>(pairs.size()))
        throw IndexOutOfRange("prop2_residual needs eigenpairs up to j_max");
    if (!(t > 0.0)) throw ValidationError("prop2_residual needs t > 0");

    const Grid& grid = pairs.front().values.grid;
    std::vector<double> sum(grid.n, 0.0);
    for (int j = n0 + 1; j <= j_max; ++j) {
        const ProjectionOfOne proj = projection_of_one(pairs, j);
        const double scale = std::pow(t * pairs[j - 1].lambda, -static_cast<double>(k));
        for (int i = 0; i < grid.n; ++i) sum[i] += scale * proj.values.values[i];
    }
    double sup = 0.0;
    for (double v : sum) sup = std::max(sup, std::abs(v));
    return sup;
}

void validate_prop2_window(const std::vector<EigenPair>& pairs, double t, int n0) {
    if (n0 < 1 || n0 + 1 > static_cast<int>(pairs.size()))
        throw IndexOutOfRange("prop2 window check needs eigenpairs up to n0+1");
    const double lam_n0 = pairs[n0 - 1].lambda;
    const double lam_next = pairs[n0].lambda;
    if (!(t > 1.0 / lam_next && t < 1.0 / lam_n0))
        throw OutOfWindow("t must lie in ]1/lambda_{n0+1}, 1/lambda_{n0}[");
}

}  // namespace slloc
