#pragma once

#include <vector>

#include "slloc/errors.hpp"

namespace slloc {

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
/// Abscissae must be strictly increasing; monotone data yields a monotone
/// interpolant. Queries are clamped to the data range.
class PchipInterpolant {
  public:
    PchipInterpolant(std::vector<double> xs, std::vector<double> ys);
    double operator()(double x) const;

  private:
    std::vector<double> xs_, ys_, slopes_;
};

/// Natural cubic spline (zero second derivative at both ends).
class CubicSpline {
  public:
    CubicSpline(std::vector<double> xs, std::vector<double> ys);
    double operator()(double x) const;

  private:
    std::vector<double> xs_, ys_, m_;  // m_ = second derivatives at knots
};

}  // namespace slloc
