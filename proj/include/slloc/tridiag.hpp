#pragma once

#include <optional>
#include <vector>

#include "slloc/errors.hpp"

namespace slloc {

/// Symmetric tridiagonal matrix A, optionally paired with a positive
/// diagonal mass matrix M for the generalized problem A v = lambda M v.
struct TridiagSystem {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
    std::optional<std::vector<double>> mass_diag;

    void validate() const;
    int order() const { return static_cast<int>(diag.size()); }
};

struct TridiagEigenpair {
    double value = 0.0;
    std::vector<double> vector;
};

/// The `count` smallest eigenpairs of A v = lambda M v, ascending.
/// Eigenvalues by Sturm-sequence bisection on the symmetrized matrix
/// M^{-1/2} A M^{-1/2}, eigenvectors by inverse iteration with partial
/// pivoting. Vectors are M-orthonormal with the first nonzero component
/// positive. Stagnating iterations restart once with the shift perturbed
/// by 1e-10 relative before reporting ConvergenceFailure.
std::vector<TridiagEigenpair> tridiag_eigs(const TridiagSystem& sys, int count);

/// Thomas solve of A x = rhs (mass_diag is not involved).
std::vector<double> tridiag_solve(const TridiagSystem& sys, const std::vector<double>& rhs);

}  // namespace slloc
