#pragma once

#include <functional>
#include <vector>

#include "slloc/errors.hpp"

namespace slloc {

/// Uniform grid of n nodes on [a, b], endpoints included.
struct Grid {
    double a = 0.0;
    double b = 1.0;
    int n = 0;

    Grid() = default;
    Grid(double a_, double b_, int n_);

    double h() const { return (b - a) / (n - 1); }
    double node(int i) const { return a + (b - a) * i / (n - 1); }

    bool operator==(const Grid&) const = default;
};

/// Real-valued function sampled on a uniform grid.
struct SampledFn {
    Grid grid;
    std::vector<double> values;

    SampledFn() = default;
    SampledFn(Grid g, std::vector<double> v);

    int size() const { return grid.n; }
    double operator[](int i) const { return values[i]; }
};

/// Sample a callable on every node of the grid.
SampledFn sample(const Grid& g, const std::function<double(double)>& f);

/// Composite Simpson integral; requires an odd node count.
double integrate(const SampledFn& f);

/// Running integral with Simpson-level accuracy at every node.
/// The final node reproduces integrate() up to rounding.
SampledFn cumulative_integral(const SampledFn& f);

enum class Lp { one, two, four, sup };

/// (integral |f|^t)^(1/t) for t in {1,2,4}; max |f| over the nodes for sup.
double lp_norm(const SampledFn& f, Lp t);

/// Second derivative: centered differences inside, one-sided second-order
/// three-term stencils at the endpoints. Needs n >= 5.
SampledFn second_derivative(const SampledFn& f);

}  // namespace slloc
