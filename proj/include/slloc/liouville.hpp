#pragma once

#include "slloc/numerics.hpp"
#include "slloc/problem.hpp"

namespace slloc {

struct QNorms {
    double sup = 0.0;
    double l4 = 0.0;
    double l1 = 0.0;
};

/// Normal-form data for a problem: the strictly increasing map y(x) with
/// B = y(L), its inverse x(y), the gauge factor f = (w p)^{1/4} along x(y),
/// and the potential Q = f''/f + q/w on the uniform y-grid, together with
/// the Linf/L4/L1 norms of Q. Immutable after transform().
class LiouvilleForm {
  public:
    const Problem& problem() const { return problem_; }
    double B() const { return B_; }
    const SampledFn& y_of_x() const { return y_of_x_; }
    const SampledFn& x_of_y() const { return x_of_y_; }
    const SampledFn& f() const { return f_; }
    const SampledFn& Q() const { return Q_; }
    const QNorms& q_norms() const { return q_norms_; }

  private:
    friend LiouvilleForm transform(const Problem&, int);
    Problem problem_;
    double B_ = 0.0;
    SampledFn y_of_x_, x_of_y_, f_, Q_;
    QNorms q_norms_;
};

/// Transform a problem to normal form on an n-node grid (n odd, >= 65).
/// y comes from a running Simpson integral of sqrt(w/p); the inverse map
/// from monotone cubic interpolation; f'' from analytic chain-rule
/// derivatives when p and w carry them, otherwise finite differences.
LiouvilleForm transform(const Problem& prob, int n);

/// Map a normal-form function v on [0, B] back to x-coordinates:
/// phi(x) = v(y(x)) / f(y(x)). Boundary zeros are preserved.
SampledFn pushforward(const SampledFn& v, const LiouvilleForm& lf);

}  // namespace slloc
