#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace padic {

bool is_prime(int p);

// A p-adic scalar in truncated canonical form
//
//     x = p^v * (d_0 + d_1 p + d_2 p^2 + ...),   d_0 != 0, d_i in [0, p-1],
//
// storing the valuation v and the first `depth` digits. The zero element is a
// distinguished marker (valuation = +infinity, |0|_p = 0). Arithmetic tracks
// the guaranteed-precision depth: the stored digits of any result are exact.
class PAdicScalar {
public:
    static PAdicScalar zero(int prime);

    // Canonical expansion of num/den to `depth` digits. The denominator may
    // contain powers of p (they move into the valuation); the remaining unit
    // part is inverted mod p digit by digit. Truncation error has p-adic norm
    // <= p^{-(valuation+depth)}.
    static PAdicScalar from_rational(long long num, long long den, int prime, int depth);

    static PAdicScalar from_integer(long long value, int prime, int depth);

    // Builds a scalar directly from a digit window: value = p^valuation *
    // (digits[0] + digits[1] p + ...), digits[0] != 0.
    static PAdicScalar from_digits(int prime, int valuation, std::vector<int> digits);

    int prime() const { return prime_; }
    bool is_zero() const { return zero_; }

    // nullopt encodes +infinity (the zero element)
    std::optional<int> valuation() const;

    const std::vector<int>& digits() const { return digits_; }
    int depth() const { return static_cast<int>(digits_.size()); }

    // |x|_p = p^{-valuation}; 0 for the zero element
    double norm() const;

    // Digitwise sum with carries, valid to the common precision window.
    // Satisfies |x+y|_p <= max(|x|_p, |y|_p), with equality when the norms
    // differ. Cancellation past the stored window yields the zero marker.
    PAdicScalar add(const PAdicScalar& other) const;

    PAdicScalar negate() const;

    // Multiplies by p^k (shifts the valuation; digits unchanged).
    PAdicScalar scaled_by_p_power(int k) const;

    // Partial sum p^v sum d_i p^i as a rational (num, den), den = p^{-v} when
    // v < 0. Used by the reconstruction checks.
    std::pair<long long, long long> to_rational() const;

private:
    PAdicScalar(int prime, bool zero, int valuation, std::vector<int> digits);

    int digit_at_exponent(int e) const;

    int prime_ = 2;
    bool zero_ = true;
    int valuation_ = 0;
    std::vector<int> digits_;
};

// Point of Q_p^n: n scalars over one prime, norm |x|_p = max_i |x_i|_p.
class PVector {
public:
    PVector(int prime, std::vector<PAdicScalar> components);

    static PVector zero(int prime, int dim);

    int prime() const { return prime_; }
    int dim() const { return static_cast<int>(components_.size()); }
    const PAdicScalar& component(int i) const { return components_[static_cast<size_t>(i)]; }

    // k with |x|_p = p^k; nullopt encodes -infinity (the zero vector)
    std::optional<int> norm_exponent() const;
    double norm() const;

    PVector add(const PVector& other) const;
    PVector scaled_by_p_power(int k) const;

private:
    int prime_;
    std::vector<PAdicScalar> components_;
};

enum class RegionKind { Ball, Sphere };

// Origin-centered ball B_gamma = {|x|_p <= p^gamma} or sphere
// S_gamma = {|x|_p = p^gamma}.
struct Region {
    RegionKind kind = RegionKind::Ball;
    int radius_exponent = 0;
};

// Weighted Haar measures with weight |x|_p^alpha:
//   sphere S_k:  p^{k(n+alpha)} (1 - p^{-n})
//   ball B_g:    sum_{k<=g} of the above = p^{g(n+alpha)}(1-p^{-n})/(1-p^{-(n+alpha)})
// The ball form requires alpha > -n (throws divergence_error otherwise).
double sphere_measure(int p, int n, int k, double alpha = 0.0);
double ball_measure(int p, int n, int gamma, double alpha = 0.0);
double measure(const Region& region, int n, int p, double alpha = 0.0);

} // namespace padic
