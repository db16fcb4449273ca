#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slloc/errors.hpp"

namespace slloc {

/// Scalar coefficient on an interval: a named closed form or tabulated
/// (x, value) samples interpolated with a monotone-safe cubic. Derivatives
/// of tabulated data come from centered finite differences on the sample
/// grid; closed forms carry analytic derivatives.
class CoefficientFn {
  public:
    using Fn = std::function<double(double)>;
    enum class Kind { closed_form, tabulated };

    CoefficientFn() = default;  // empty; only valid as a placeholder

    static CoefficientFn closed_form(std::string name, Fn value, Fn d1 = {}, Fn d2 = {});
    static CoefficientFn constant(double c);
    static CoefficientFn tabulated(std::vector<double> xs, std::vector<double> vals);

    double value(double x) const;
    double deriv1(double x) const;
    double deriv2(double x) const;
    bool analytic_derivatives() const { return kind_ == Kind::closed_form; }
    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    double constant_value() const { return const_value_; }
    bool is_constant() const { return is_constant_; }
    const std::vector<double>& table_x() const { return xs_; }
    const std::vector<double>& table_v() const { return vals_; }
    double coverage_lo() const;
    double coverage_hi() const;

  private:
    Kind kind_ = Kind::closed_form;
    std::string name_;
    Fn value_, d1_, d2_;
    bool is_constant_ = false;
    double const_value_ = 0.0;
    std::vector<double> xs_, vals_;  // tabulated form only
};

/// Named closed-form coefficient on [0, L]. Known names: "one", "zero",
/// "tanh-step-10", "tanh-step-20", "two-plus-sin".
CoefficientFn coefficient_preset(const std::string& name, double L);

/// A validated regular Sturm-Liouville problem on [0, L] with Dirichlet
/// conditions: p, w strictly positive and q nonnegative, all checked on a
/// dense audit grid at construction.
class Problem {
  public:
    static constexpr int kDefaultAuditPoints = 2049;

    Problem() = default;  // empty; only valid as a placeholder

    static Problem make(double L, CoefficientFn p, CoefficientFn q, CoefficientFn w,
                        std::string label = "", int audit_points = kDefaultAuditPoints);

    double length() const { return length_; }
    const CoefficientFn& p() const { return p_; }
    const CoefficientFn& q() const { return q_; }
    const CoefficientFn& w() const { return w_; }
    const std::string& label() const { return label_; }
    int audit_points() const { return audit_points_; }

    std::string to_config_string() const;
    static Problem from_config_string(const std::string& text);
    static Problem from_config_file(const std::string& path);

  private:
    double length_ = 0.0;
    CoefficientFn p_, q_, w_;
    std::string label_;
    int audit_points_ = kDefaultAuditPoints;
};

/// Named experiment configurations. Accepts "laplacian",
/// "laplacian-<length>" (e.g. "laplacian-2.5"), "fig1-tanh-metric",
/// "setup2" and "setup3".
Problem preset(const std::string& name);

Problem make_problem(double L, CoefficientFn p, CoefficientFn q, CoefficientFn w,
                     std::string label = "");

}  // namespace slloc
