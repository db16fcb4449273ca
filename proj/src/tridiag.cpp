#include "slloc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace slloc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Number of eigenvalues of the symmetric tridiagonal (d, e) strictly below x,
// via the Sturm sequence of leading-minor pivots (Barth-Martin-Wilkinson).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                const std::vector<double>& e2, double x) {
    const int m = static_cast<int>(d.size());
    int s = 0;
    double u = 1.0;
    for (int i = 0; i < m; ++i) {
        double v;
        if (u != 0.0)
            v = e2[i] / u;
        else
            v = (i > 0 ? std::abs(e[i - 1]) : 0.0) / kEps;
        u = d[i] - x - v;
        if (u < 0.0) ++s;
    }
    return s;
}

// LU factorization of (T - sigma I) with partial pivoting; row swaps widen
// the upper bandwidth to two superdiagonals. Zero pivots are replaced by
// eps * ||T|| so inverse iteration can proceed through exact shifts.
struct ShiftedLU {
    std::vector<double> du, u1, u2, lmult;
    std::vector<char> swapped;
    int m = 0;

    ShiftedLU(const std::vector<double>& d, const std::vector<double>& e, double sigma,
              double matnorm) {
        m = static_cast<int>(d.size());
        du.assign(m, 0.0);
        u1.assign(std::max(0, m - 1), 0.0);
        u2.assign(std::max(0, m - 2), 0.0);
        lmult.assign(std::max(0, m - 1), 0.0);
        swapped.assign(std::max(0, m - 1), 0);
        const double tiny = kEps * std::max(matnorm, 1e-300);

        double p1 = d[0] - sigma;
        double p2 = m > 1 ? e[0] : 0.0;
        double p3 = 0.0;
        for (int i = 0; i + 1 < m; ++i) {
            double b1 = e[i];
            double b2 = d[i + 1] - sigma;
            double b3 = i + 2 < m ? e[i + 1] : 0.0;
            if (std::abs(b1) > std::abs(p1)) {
                std::swap(p1, b1);
                std::swap(p2, b2);
                std::swap(p3, b3);
                swapped[i] = 1;
            }
            if (p1 == 0.0) p1 = tiny;
            const double mu = b1 / p1;
            lmult[i] = mu;
            du[i] = p1;
            u1[i] = p2;
            if (i + 2 < m) u2[i] = p3;
            p1 = b2 - mu * p2;
            p2 = b3 - mu * p3;
            p3 = 0.0;
        }
        du[m - 1] = p1 == 0.0 ? tiny : p1;
    }

    void solve(std::vector<double>& x) const {
        for (int i = 0; i + 1 < m; ++i) {
            if (swapped[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= lmult[i] * x[i];
        }
        x[m - 1] /= du[m - 1];
        if (m >= 2) x[m - 2] = (x[m - 2] - u1[m - 2] * x[m - 1]) / du[m - 2];
        for (int i = m - 3; i >= 0; --i)
            x[i] = (x[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / du[i];
    }
};

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double residual_inf(const std::vector<double>& d, const std::vector<double>& e, double lambda,
                    const std::vector<double>& v) {
    const int m = static_cast<int>(d.size());
    double r = 0.0;
    for (int i = 0; i < m; ++i) {
        double t = (d[i] - lambda) * v[i];
        if (i > 0) t += e[i - 1] * v[i - 1];
        if (i + 1 < m) t += e[i] * v[i + 1];
        r = std::max(r, std::abs(t));
    }
    return r;
}

void orthogonalize(std::vector<double>& z, const std::vector<const std::vector<double>*>& basis) {
    for (const auto* q : basis) {
        double dot = 0.0;
        for (size_t i = 0; i < z.size(); ++i) dot += z[i] * (*q)[i];
        for (size_t i = 0; i < z.size(); ++i) z[i] -= dot * (*q)[i];
    }
}

std::vector<double> inverse_iteration(const std::vector<double>& d, const std::vector<double>& e,
                                      double lambda, double matnorm,
                                      const std::vector<const std::vector<double>*>& cluster,
                                      unsigned seed) {
    const int m = static_cast<int>(d.size());
    const double floor = kEps * std::max(matnorm, 1e-300);
    const int max_iter = 40;
    double shift = lambda;

    for (int attempt = 0; attempt < 4; ++attempt) {
        ShiftedLU lu(d, e, shift, matnorm);
        std::mt19937 gen(seed + 0x9e3779b9u * static_cast<unsigned>(attempt));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> v(m);
        for (double& x : v) x = dist(gen);
        orthogonalize(v, cluster);
        double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (nrm == 0.0) continue;
        for (double& x : v) x /= nrm;

        double best_r = std::numeric_limits<double>::infinity();
        std::vector<double> best_v;
        for (int it = 0; it < max_iter; ++it) {
            lu.solve(v);
            orthogonalize(v, cluster);
            nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
            if (nrm == 0.0) break;
            for (double& x : v) x /= nrm;
            const double r = residual_inf(d, e, lambda, v);
            const double vinf = inf_norm(v);
            if (r <= 16.0 * floor * vinf) return v;
            if (r < best_r) {
                best_r = r;
                best_v = v;
            }
        }
        if (!best_v.empty() && best_r <= 256.0 * floor * inf_norm(best_v)) return best_v;
        // Restart with the documented 1e-10 relative shift perturbation.
        shift = lambda + (std::abs(lambda) > 0 ? std::abs(lambda) : matnorm) * 1e-10;
    }
    throw ConvergenceFailure("inverse iteration stagnated for eigenvalue " +
                             std::to_string(lambda));
}

}  // namespace

void TridiagSystem::validate() const {
    if (diag.empty()) throw ValidationError("tridiagonal system is empty");
    if (off.size() + 1 != diag.size())
        throw ValidationError("off-diagonal length must be diag length - 1");
    if (mass_diag) {
        if (mass_diag->size() != diag.size())
            throw ValidationError("mass diagonal length must match diag length");
        for (double w : *mass_diag)
            if (!(w > 0.0)) throw ValidationError("mass diagonal entries must be positive");
    }
}

std::vector<TridiagEigenpair> tridiag_eigs(const TridiagSystem& sys, int count) {
    sys.validate();
    const int m = sys.order();
    if (count < 1 || count > m)
        throw ValidationError("eigenpair count must lie in [1, " + std::to_string(m) + "]");

    // Symmetrize the generalized problem: B = M^{-1/2} A M^{-1/2}.
    std::vector<double> msqrt(m, 1.0);
    if (sys.mass_diag)
        for (int i = 0; i < m; ++i) msqrt[i] = std::sqrt((*sys.mass_diag)[i]);
    std::vector<double> d(m), e(std::max(0, m - 1));
    for (int i = 0; i < m; ++i) d[i] = sys.diag[i] / (msqrt[i] * msqrt[i]);
    for (int i = 0; i + 1 < m; ++i) e[i] = sys.off[i] / (msqrt[i] * msqrt[i + 1]);
    std::vector<double> e2(m, 0.0);
    for (int i = 1; i < m; ++i) e2[i] = e[i - 1] * e[i - 1];

    // Gershgorin bracket and matrix scale.
    double lo = d[0], hi = d[0], matnorm = 0.0;
    for (int i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < m ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
        matnorm = std::max(matnorm, std::abs(d[i]) + r);
    }
    const double pad = kEps * std::max({std::abs(lo), std::abs(hi), 1e-300}) * m;
    lo -= pad;
    hi += pad;

    std::vector<double> lambdas(count);
    for (int k = 1; k <= count; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 140 && b - a > 2.0 * kEps * (std::abs(a) + std::abs(b)) + 1e-300;
             ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, e2, mid) >= k)
                b = mid;
            else
                a = mid;
        }
        lambdas[k - 1] = 0.5 * (a + b);
    }

    // Eigenvectors; near-coincident eigenvalues are orthogonalized as a cluster.
    const double cluster_tol = 1e3 * kEps * std::max(matnorm, 1.0);
    std::vector<TridiagEigenpair> out(count);
    std::vector<std::vector<double>> sym_vectors(count);
    for (int k = 0; k < count; ++k) {
        std::vector<const std::vector<double>*> cluster;
        for (int j = k - 1; j >= 0; --j) {
            if (std::abs(lambdas[k] - lambdas[j]) <= cluster_tol)
                cluster.push_back(&sym_vectors[j]);
            else
                break;
        }
        sym_vectors[k] = inverse_iteration(d, e, lambdas[k], matnorm, cluster,
                                           0x5EED0000u + 2654435761u * static_cast<unsigned>(k));

        // Back-transform v = M^{-1/2} w and renormalize v' M v = 1.
        std::vector<double> v(m);
        double s = 0.0;
        for (int i = 0; i < m; ++i) {
            v[i] = sym_vectors[k][i] / msqrt[i];
            s += v[i] * v[i] * msqrt[i] * msqrt[i];
        }
        s = std::sqrt(s);
        const double vmax = inf_norm(v);
        double flip = 1.0;
        for (int i = 0; i < m; ++i) {
            if (std::abs(v[i]) > 1e-12 * vmax) {
                flip = v[i] < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (int i = 0; i < m; ++i) v[i] = flip * v[i] / s;
        out[k].value = lambdas[k];
        out[k].vector = std::move(v);
    }
    return out;
}

std::vector<double> tridiag_solve(const TridiagSystem& sys, const std::vector<double>& rhs) {
    sys.validate();
    const int m = sys.order();
    if (static_cast<int>(rhs.size()) != m)
        throw ValidationError("rhs length must match system order");

    std::vector<double> c(std::max(0, m - 1)), x(m);
    double piv = sys.diag[0];
    double scale = std::abs(sys.diag[0]) + (m > 1 ? std::abs(sys.off[0]) : 0.0);
    if (std::abs(piv) <= 1e-14 * scale)
        throw SingularPivot("tridiagonal pivot vanished at row 0");
    if (m > 1) c[0] = sys.off[0] / piv;
    x[0] = rhs[0] / piv;
    for (int i = 1; i < m; ++i) {
        piv = sys.diag[i] - sys.off[i - 1] * c[i - 1];
        scale = std::abs(sys.diag[i]) + std::abs(sys.off[i - 1]) +
                (i + 1 < m ? std::abs(sys.off[i]) : 0.0);
        if (std::abs(piv) <= 1e-14 * scale)
            throw SingularPivot("tridiagonal pivot vanished at row " + std::to_string(i));
        if (i + 1 < m) c[i] = sys.off[i] / piv;
        x[i] = (rhs[i] - sys.off[i - 1] * x[i - 1]) / piv;
    }
    for (int i = m - 2; i >= 0; --i) x[i] -= c[i] * x[i + 1];
    return x;
}

}  // namespace slloc
