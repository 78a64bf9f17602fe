#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padic/padic_core.hpp"

namespace padic {

// Radial step function f(x) = g(|x|_p): one value per norm shell S_k for
// k in [k_min, k_max], a constant tail_value for every k < k_min, and 0 for
// every k > k_max.
struct RadialFunction {
    int prime = 2;
    int dim = 1;
    int k_min = 0;
    int k_max = 0;
    std::vector<double> shell_values{0.0};
    double tail_value = 0.0;

    static RadialFunction zero(int prime, int dim);
    static RadialFunction indicator_sphere(int prime, int dim, int k);
    static RadialFunction indicator_ball(int prime, int dim, int gamma);

    // g(p^k) with the window/tail conventions applied
    double shell(int k) const;

    // f(v) through the vector norm; the zero vector falls in the tail region
    double eval(const PVector& v) const;

    bool is_identically_zero() const;
    void validate() const;
};

enum class CombineOp { Add, Mul };

// scalar * (f op h), shell-wise on the union window; tails combine the same
// way (sum of tails for Add, product for Mul).
RadialFunction pointwise_combine(const RadialFunction& f, const RadialFunction& h,
                                 CombineOp op, double scalar = 1.0);

RadialFunction scale(const RadialFunction& f, double c);

// Radial kernel psi(|x|_p) >= 0. Three families:
//   Tabulated      values on a finite exponent window, zero outside
//   PowerCutoff(a) psi(t) = t^a for t <= 1, 0 for t > 1
//   TwoSidedPower  psi(t) = t^a for t <= 1, t^{-b} for t > 1
// Absolute values are applied at construction; only |psi| enters any bound.
class KernelSpec {
public:
    enum class Family { Tabulated, PowerCutoff, TwoSidedPower };

    static KernelSpec tabulated(std::map<int, double> values);
    static KernelSpec power_cutoff(double a);
    static KernelSpec two_sided_power(double a, double b);

    Family family() const { return family_; }
    double low_exponent() const { return a_; }   // exponent of t^a on (0,1]
    double high_decay() const { return b_; }     // decay of t^{-b} on (1,inf)
    const std::map<int, double>& table() const { return table_; }
    int j_min() const;
    int j_max() const;

    // psi(p^j)
    double eval(int p, int j) const;

    // true when psi(p^j) = 0 for all j >= 1 (PowerCutoff, short tables)
    bool vanishes_above_one() const;

    std::string describe() const;

private:
    KernelSpec() = default;
    Family family_ = Family::PowerCutoff;
    double a_ = 0.0;
    double b_ = 0.0;
    std::map<int, double> table_;
};

// Radial symbol b for commutators: a radial profile plus the value b(0).
// Unlike functions, symbols continue with their last shell value above the
// window (constant symbols stay constant everywhere); below the window the
// profile tail applies as usual.
struct RadialSymbol {
    RadialFunction profile;
    double value_at_zero = 0.0;

    static RadialSymbol constant(double c, int prime, int dim);
    // b(x) = |x|_p^delta on the window, b(0) = 0, tail 0
    static RadialSymbol power(double delta, int prime, int dim, int k_min, int k_max);

    double shell(int k) const {
        if (k > profile.k_max) return profile.shell_values.back();
        return profile.shell(k);
    }
    double eval(const PVector& v) const;
};

// Homogeneous Lipschitz seminorm sup_{x, h != 0} |b(x+h)-b(x)| / |h|_p^delta,
// computed by the radial closed form: ultrametricity kills the numerator when
// |h| < |x| and pins the denominator at the larger radius otherwise, so the
// sup runs over exponent pairs j < m (j ranging over shells, the tail and the
// origin). Returns +infinity when the tail value differs from b(0).
double lipschitz_seminorm(const RadialSymbol& b, double delta);

// Deterministic test-family generator; values log-uniform in
// [value_min, value_max], nonnegative unless signed_values.
RadialFunction random_radial(int prime, int dim, int k_min, int k_max,
                             double value_min, double value_max,
                             std::uint64_t seed, bool signed_values = false);

} // namespace padic
