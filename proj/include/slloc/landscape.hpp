#pragma once

#include <optional>
#include <vector>

#include "slloc/numerics.hpp"
#include "slloc/problem.hpp"
#include "slloc/spectral.hpp"

namespace slloc {

/// One landscape iterate: values on [0, L] with boundary zeros. The plain
/// variants are positive in the interior; raw_norm records the weighted L2
/// norm of the unnormalized iterate.
struct LandscapeIterate {
    int k = 1;
    std::optional<double> t;
    SampledFn values;
    bool normalized = false;
    double raw_norm = 0.0;
};

/// P_j applied to the constant 1: values = coefficient * phi_j with
/// coefficient = <phi_j, 1>.
struct ProjectionOfOne {
    int j = 0;
    SampledFn values;
    double coefficient = 0.0;
    double norm = 0.0;
};

/// Solve T ell = 1 (one Thomas solve of the direct discretization against
/// the weight); unnormalized, positivity validated.
LandscapeIterate landscape(const Problem& prob, int n);

/// k repeated solves starting from the constant 1 (power iteration on the
/// inverse); returns the normalized iterate with raw_norm recorded.
LandscapeIterate iterated_landscape(const Problem& prob, int k, int n);

/// k solves against 1 with the operator scaled by t; equals t^{-k} times
/// the unnormalized iterate.
LandscapeIterate generalized_landscape(const Problem& prob, int k, double t, int n);

ProjectionOfOne projection_of_one(const std::vector<EigenPair>& pairs, int j);

/// 2 lambda1^{1/2} L ||P_1 1||_2^{-1} (lambda1/lambda2)^{k-1/2}.
double prop1_bound(double lambda1, double lambda2, double L, double p1_norm, int k);

/// (L / t^{1/2}) (t lambda_next)^{-(k-1/2)}; needs t * lambda_next > 1.
double prop2_bound(double L, double t, double lambda_next, int k);

/// Sup-norm of sum_{j=n0+1}^{j_max} (t lambda_j)^{-k} P_j 1, the
/// numerically stable tail form of the generalized-landscape error.
double prop2_residual(const std::vector<EigenPair>& pairs, double t, int k, int n0, int j_max);

/// Throws OutOfWindow unless 1/lambda_{n0+1} < t < 1/lambda_{n0}.
void validate_prop2_window(const std::vector<EigenPair>& pairs, double t, int n0);

}  // namespace slloc
