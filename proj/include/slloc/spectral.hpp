#pragma once

#include <string>
#include <vector>

#include "slloc/liouville.hpp"
#include "slloc/numerics.hpp"
#include "slloc/problem.hpp"
#include "slloc/tridiag.hpp"

namespace slloc {

enum class Coordinate { x, y };
enum class Normalization { unit_l2_weighted, slope_normalized };

/// One eigenpair with the eigenfunction sampled on the full grid
/// (boundary zeros included). User-facing pairs are w-weighted-L2
/// normalized with the first lobe positive.
struct EigenPair {
    int index = 0;  // 1-based
    double lambda = 0.0;
    SampledFn values;
    Coordinate coordinate = Coordinate::x;
    Normalization normalization = Normalization::unit_l2_weighted;
};

struct CrossValidationDelta {
    double lambda_rel = 0.0;
    double eigenfunction_sup = 0.0;
};

struct SpectrumReport {
    std::vector<EigenPair> pairs;  // direct-route pairs
    std::string route;
    int grid_size = 0;
    std::vector<CrossValidationDelta> deltas;  // present only after cross-validation
};

/// Conservative second-order discretization of -(p u')' + q u = lambda w u
/// with Dirichlet conditions: p at half-nodes, diagonal mass w.
TridiagSystem direct_discretization(const Problem& prob, const Grid& xgrid);

std::vector<EigenPair> eigenpairs_direct(const Problem& prob, int n_modes, int n);

/// Eigenpairs of -v'' + Q v = lambda v on [0, B], on the transform's grid.
std::vector<EigenPair> eigenpairs_normal_form(const LiouvilleForm& lf, int n_modes);

/// Run both routes, push the normal-form eigenfunctions back to x, and
/// report per-index relative eigenvalue deltas and sup-norm eigenfunction
/// deltas after sign alignment.
SpectrumReport cross_validate(const Problem& prob, int n_modes, int n);

/// Volterra operator: (K_Q u)(y) = integral_0^y Q(z) sin(sqrt(lambda)(y-z)) u(z) dz,
/// truncated convolution by composite Simpson with a trapezoid closing panel
/// on odd prefixes.
SampledFn apply_kq(const SampledFn& Q, double lambda, const SampledFn& u);

struct KqBounds {
    double l2 = 0.0;
    double l4 = 0.0;
};

/// Operator-norm bounds for K_Q on L2 and L4:
///   l2 = B ||Q||_inf / 2,
///   l4 = (B^3/12 + 5B/(32 lambda) + 5/(32 lambda^{3/2}))^{1/4} ||Q||_4.
KqBounds kq_norm_bounds(double B, double lambda, const QNorms& norms);

}  // namespace slloc
