#pragma once

#include <optional>

#include "padic/norms.hpp"
#include "padic/radial.hpp"

namespace padic {

// Discrete and continuous forms of a kernel moment:
//   discrete_sum        = sum_j psi(p^j)^w p^{j s}
//   continuous_integral = int_0^inf psi(t)^w t^{s-1} dt   (analytic families)
struct KernelMoment {
    double discrete_sum = 0.0;
    std::optional<double> continuous_integral;
    double s = 0.0;
    double w = 1.0;
};

// Closed-form geometric sums for the analytic families, finite table sums for
// Tabulated. Throws divergence_error naming the failing side.
KernelMoment kernel_moment(const KernelSpec& psi, int p, double s, double w);

// sup_j psi(p^j) p^{j s}: the q' = infinity (q = 1) replacement for the
// Hoelder moment. Throws divergence_error when unbounded.
double kernel_sup_moment(const KernelSpec& psi, int p, double s);

// int_0^inf psi(t)^{q'} t^{(q'-1)(n+alpha) - beta q' - 1} max(1, t^{-delta q'}) dt
// in closed form for the analytic families (the commutator's combined
// integrand; reported, never asserted).
std::optional<double> thm5_combined_integral(const KernelSpec& psi, const SpaceParams& sp);

struct Thm3Constants {
    double k1_hat = 0.0;               // (1-p^{-n})^{1/q'} D1, the asserted constant
    double d1 = 0.0;                   // D1 = sum_j psi(p^j) p^{-j n lambda}
    std::optional<double> k1_paper;    // continuous form, C = 1
};

struct Thm4Constants {
    double k2_hat = 0.0;               // ((1-p^{-n})/(1-p^{-(n+gamma)}))^{1/r} (1-p^{-n})^{1/q'} D2
    double d2 = 0.0;                   // (sum_j psi^{q'} p^{j s1})^{1/q'}; sup-moment at q = 1
    std::optional<double> a_continuous;
    std::optional<double> k2_paper;
};

struct Thm5Constants {
    double k4_hat = 0.0;               // ratio^{1/r} (1-p^{-n})^{1/q'} (D(s1)+D(s2)) |b|_Lip
    double d_s1 = 0.0;
    double d_s2 = 0.0;
    std::optional<double> k3q_paper;   // combined integral, C = 1
    std::optional<double> k4_paper;
};

// lambda in [-1/q, 0); D1 from the w = 1 moment at s = -n lambda
Thm3Constants constant_thm3(const KernelSpec& psi, const SpaceParams& sp);

// requires the (n+alpha)/q - beta = (n+gamma)/r balance;
// s1 = (n+alpha)(q'-1) - beta q', w = q'
Thm4Constants constant_thm4(const KernelSpec& psi, const SpaceParams& sp);

// requires the commutator balance; moments at s1 and s2 = s1 - delta q'
Thm5Constants constant_thm5(const KernelSpec& psi, double b_seminorm, const SpaceParams& sp);

// Marcinkiewicz exponent algebra: 1/q = (1-theta)/q1 + theta/q2 and likewise
// for r. Requires 1 <= q1 < q2, r1 != r2, theta in (0, 1).
std::pair<double, double> interpolation_exponents(double q1, double r1, double q2, double r2,
                                                  double theta);

enum class BalanceUnknown { R, Gamma, Beta, Delta };
enum class TheoremId { Thm3, Thm4, Thm5 };

// Solves the selected theorem's linear balance relation for one unknown and
// validates the admissible range (r >= 1, gamma > -n, beta in [0, n),
// delta in (0, 1)).
double solve_balance(TheoremId which, const SpaceParams& known, BalanceUnknown unknown);

} // namespace padic
