#pragma once

#include "slloc/liouville.hpp"
#include "slloc/numerics.hpp"
#include "slloc/problem.hpp"

namespace slloc {

/// Localization coefficient alpha(u) = ||u||_2^4 / ||u||_4^4.
/// Small alpha means the amplitude concentrates on a short subinterval.
double alpha(const SampledFn& u);

/// Closed-form alpha of sin(sqrt(lambda) y) on [0, B].
double alpha_phi_closed_form(double lambda, double B);

/// Dimensionless envelope data at one frequency:
///   a = B ||Q||_inf / (2 sqrt(lambda)),
///   b = (B^3/12 + 5B/(32 lambda) + 5/(32 lambda^{3/2}))^{1/4} ||Q||_4 / sqrt(lambda),
/// plus the norm-bridge constants beta(p, w) <= gamma(p, w).
struct BoundCoefficients {
    double a = 0.0;
    double b = 0.0;
    double beta = 1.0;
    double gamma = 1.0;
    double lambda = 0.0;
    double B = 0.0;
};

BoundCoefficients bound_coefficients(const LiouvilleForm& lf, const Problem& prob, double lambda);

/// Computes a and b alone from (B, norms); beta and gamma are left at 1.
BoundCoefficients bound_coefficients_raw(double B, const QNorms& norms, double lambda);

struct Theorem1Envelope {
    double lower = 0.0;
    double upper = 0.0;
    bool applicable = false;
};

/// Two-sided envelope on alpha at the coefficients' frequency:
///   lower = beta ((1-b)/(1+a))^4 alpha_Phi,  upper = gamma ((1+b)/(1-a))^4 alpha_Phi,
/// applicable only when a < 1 and b < 1 (inapplicable is a result, not an error).
Theorem1Envelope theorem1_envelope(const BoundCoefficients& coeffs);

/// Smallest lambda* with a(B, lambda) < 1 and b(B, lambda) < 1 for every
/// lambda >= lambda*; bisection to absolute tolerance 1e-6 (a and b are
/// strictly decreasing in lambda). Zero norms give 0.
double assumption_threshold(double B, const QNorms& norms);

enum class Regime { c0, bv, c4ac };

struct Theorem2Envelope {
    double lower = 0.0;
    double upper = 0.0;
    Regime regime = Regime::c0;
    double rate_exponent = -0.5;  // remainder decays like lambda^rate_exponent
};

/// Asymptotic envelope: regimes c0 and c4ac emit the leading constants
/// (beta 2B/3, gamma 2B/3) with rate tags -1/2 and -3/2; regime bv emits
/// the explicit ratio bounds driven by ||Q||_1 with rate tag -1.
Theorem2Envelope theorem2_envelope(Regime regime, double lambda, double B, double beta,
                                   double gamma, double l1_norm_q);

}  // namespace slloc
