#pragma once

#include <cstdint>
#include <functional>

#include "padic/padic_core.hpp"
#include "padic/radial.hpp"
#include "padic/rng.hpp"

namespace padic {

// Haar sampler configuration: uniform draws from the ball B_{ball_exponent},
// each coordinate truncated to digit_depth canonical digits.
struct SampleConfig {
    int ball_exponent = 0;
    int digit_depth = 12;
    long sample_count = 100000;
    std::uint64_t seed = 0;
    int jobs = 1;
};

// One uniform draw from B_gamma in Q_p^n: digits i.i.d. uniform on [0, p-1]
// at exponents -gamma .. -gamma+D-1 per coordinate, so
// Pr[|x_i|_p <= p^{gamma-m}] = p^{-m}.
PVector sample_ball(SplitRng& rng, int p, int n, int gamma, int depth);

// Draw from the sphere S_gamma (leading digit of one coordinate forced).
PVector sample_sphere(SplitRng& rng, int p, int n, int gamma);

struct McEstimate {
    double estimate = 0.0;
    double stderr_est = 0.0;
    long count = 0;
};

// |B_gamma| * mean of F(x) |x|_p^alpha over Haar samples of B_gamma. Work is
// split across 64 fixed strata merged in order, so the result is identical
// for any job count.
McEstimate mc_integral(const std::function<double(const PVector&)>& integrand,
                       const SampleConfig& cfg, int p, int n, double alpha = 0.0);

struct ShiftReport {
    McEstimate base;
    McEstimate shifted;
    double z = 0.0;
};

// Compares the integral of F with the integral of x -> F(x + a) over the
// sampled ball (independent sample streams); z is the difference in combined
// standard errors.
ShiftReport check_shift_invariance(const std::function<double(const PVector&)>& integrand,
                                   const PVector& shift, const SampleConfig& cfg, int p, int n);

// Monte-Carlo estimate of H_{psi,beta} f at the point x, sampling y from the
// ball that carries supp f and evaluating the integrand through the vector
// dilation x |y|_p.
McEstimate mc_pointwise_hausdorff(const KernelSpec& psi, double beta, const RadialFunction& f,
                                  const PVector& x, const SampleConfig& cfg);

} // namespace padic
