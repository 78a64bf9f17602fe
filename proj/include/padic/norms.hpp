#pragma once

#include <limits>
#include <vector>

#include "padic/radial.hpp"

namespace padic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Decreasing rearrangement of a radial step function: strictly decreasing
// values with the weighted measures of their level sets as widths. The
// terminal zero step (infinite width on functions of finite support) is
// implicit.
struct StepRearrangement {
    struct Step {
        double value;
        double width;
    };
    std::vector<Step> steps;

    double total_measure() const;
    // f*(t); 0 beyond the last breakpoint
    double eval(double t) const;
};

// Exponent tuple shared by the bound constants and the verification harness.
// q' is the conjugate exponent q/(q-1); 1/q' = 1 - 1/q handles q = 1 without
// infinities.
struct SpaceParams {
    int p = 2;
    int n = 1;
    double q = 2.0;
    double r = 2.0;
    double s = kInf;
    double alpha = 0.0;
    double gamma = 0.0;
    double beta = 0.0;
    double delta = 0.5;
    double lambda = -0.5;
};

double conjugate_exponent(double q);      // q/(q-1), q > 1
double inv_conjugate_exponent(double q);  // 1 - 1/q, defined for q >= 1

// (n+alpha)/q - beta = (n+gamma)/r
bool thm4_balance_holds(const SpaceParams& sp, double tol = 1e-9);
// (beta+delta) - (n+alpha)/q = -(n+gamma)/r
bool thm5_balance_holds(const SpaceParams& sp, double tol = 1e-9);

// integral of f against |x|_p^alpha dx as an exact shell sum; the k < k_min
// tail in closed geometric form (requires alpha > -n when tail_value != 0)
double haar_integral(const RadialFunction& f, double alpha);

// same, restricted to the ball B_gamma
double haar_integral_over_ball(const RadialFunction& f, double alpha, int gamma);

// ( integral |f|^q |x|^alpha dx )^{1/q}
double lebesgue_norm(const RadialFunction& f, double q, double alpha);

// weighted measure of {|f| > lambda}; +infinity only when a nonzero tail
// exceeds lambda while alpha <= -n
double distribution(const RadialFunction& f, double lambda, double alpha);

// weighted measure of {|f| >= lambda}, lambda > 0
double distribution_geq(const RadialFunction& f, double lambda, double alpha);

StepRearrangement rearrangement(const RadialFunction& f, double alpha);

// sup_{lambda>0} lambda * distribution(lambda)^{1/q}, computed exactly over
// the finitely many candidate levels
double weak_norm(const RadialFunction& f, double q, double alpha);

// Lorentz norm ( (s/q) int_0^inf [t^{1/q} f*(t)]^s dt/t )^{1/s}; s = infinity
// gives sup_t t^{1/q} f*(t). Step closed form; scaled to avoid overflow in
// T^{s/q} for large supports.
double lorentz_norm(const RadialFunction& f, double q, double s, double alpha);

// sup_gamma |B_gamma|^{-lambda-1/q} ( int_{B_gamma} |f|^q dx )^{1/q}, with
// unweighted Haar measure inside the ball; lambda in [-1/q, 0)
double central_morrey_norm(const RadialFunction& f, double q, double lambda);

// sup_gamma |B_gamma|^{-lambda-1/q} sup_t t |{x in B_gamma : |f(x)| > t}|^{1/q}
double weak_central_morrey_norm(const RadialFunction& f, double q, double lambda);

} // namespace padic
