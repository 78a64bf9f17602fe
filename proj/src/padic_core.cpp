#include "padic/padic_core.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "padic/errors.hpp"

namespace padic {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

namespace {

void require_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

// positive representative of a mod p
long long pos_mod(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_inverse(long long a, long long p) {
    // extended gcd; p prime, a coprime to p
    long long t = 0, new_t = 1;
    long long r = p, new_r = pos_mod(a, p);
    while (new_r != 0) {
        const long long quo = r / new_r;
        t -= quo * new_t;
        std::swap(t, new_t);
        r -= quo * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("element not invertible mod p");
    return pos_mod(t, p);
}

} // namespace

PAdicScalar::PAdicScalar(int prime, bool zero, int valuation, std::vector<int> digits)
    : prime_(prime), zero_(zero), valuation_(valuation), digits_(std::move(digits)) {}

PAdicScalar PAdicScalar::zero(int prime) {
    require_prime(prime);
    return PAdicScalar(prime, true, 0, {});
}

PAdicScalar PAdicScalar::from_rational(long long num, long long den, int prime, int depth) {
    require_prime(prime);
    if (den == 0) throw std::invalid_argument("denominator must be nonzero");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (num == 0) return zero(prime);

    const long long g = std::gcd(std::abs(num), std::abs(den));
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }

    int val = 0;
    while (num % prime == 0) {
        num /= prime;
        ++val;
    }
    while (den % prime == 0) {
        den /= prime;
        --val;
    }

    // digit recurrence: r_{k+1} = (r_k - a_k * den) / p with a_k = r_k/den mod p
    const long long inv_den = mod_inverse(den, prime);
    std::vector<int> digits;
    digits.reserve(static_cast<size_t>(depth));
    long long r = num;
    for (int i = 0; i < depth; ++i) {
        const long long a = pos_mod(pos_mod(r, prime) * inv_den, prime);
        digits.push_back(static_cast<int>(a));
        r = (r - a * den) / prime;
    }
    return PAdicScalar(prime, false, val, std::move(digits));
}

PAdicScalar PAdicScalar::from_integer(long long value, int prime, int depth) {
    return from_rational(value, 1, prime, depth);
}

PAdicScalar PAdicScalar::from_digits(int prime, int valuation, std::vector<int> digits) {
    require_prime(prime);
    if (digits.empty() || digits.front() == 0) {
        throw std::invalid_argument("from_digits: leading digit must be nonzero");
    }
    for (int d : digits) {
        if (d < 0 || d >= prime) throw std::invalid_argument("from_digits: digit out of [0, p-1]");
    }
    return PAdicScalar(prime, false, valuation, std::move(digits));
}

std::optional<int> PAdicScalar::valuation() const {
    if (zero_) return std::nullopt;
    return valuation_;
}

double PAdicScalar::norm() const {
    if (zero_) return 0.0;
    return std::pow(static_cast<double>(prime_), -static_cast<double>(valuation_));
}

int PAdicScalar::digit_at_exponent(int e) const {
    if (zero_) return 0;
    const int idx = e - valuation_;
    if (idx < 0 || idx >= depth()) return 0;
    return digits_[static_cast<size_t>(idx)];
}

PAdicScalar PAdicScalar::add(const PAdicScalar& other) const {
    if (prime_ != other.prime_) throw std::invalid_argument("mismatched primes in p-adic addition");
    if (zero_) return other;
    if (other.zero_) return *this;

    const int lo = std::min(valuation_, other.valuation_);
    const int hi = std::min(valuation_ + depth(), other.valuation_ + other.depth());
    // hi > lo always: each operand contributes at least one digit above lo
    std::vector<int> ds;
    ds.reserve(static_cast<size_t>(hi - lo));
    int carry = 0;
    for (int e = lo; e < hi; ++e) {
        const int s = digit_at_exponent(e) + other.digit_at_exponent(e) + carry;
        ds.push_back(s % prime_);
        carry = s / prime_;
    }
    // carry past hi is beyond the guaranteed window and is dropped

    int val = lo;
    size_t first = 0;
    while (first < ds.size() && ds[first] == 0) {
        ++first;
        ++val;
    }
    if (first == ds.size()) {
        // cancelled to the available precision
        return zero(prime_);
    }
    ds.erase(ds.begin(), ds.begin() + static_cast<long>(first));
    return PAdicScalar(prime_, false, val, std::move(ds));
}

PAdicScalar PAdicScalar::negate() const {
    if (zero_) return *this;
    std::vector<int> ds(digits_.size());
    ds[0] = prime_ - digits_[0];
    for (size_t i = 1; i < digits_.size(); ++i) ds[i] = prime_ - 1 - digits_[i];
    return PAdicScalar(prime_, false, valuation_, std::move(ds));
}

PAdicScalar PAdicScalar::scaled_by_p_power(int k) const {
    if (zero_) return *this;
    return PAdicScalar(prime_, false, valuation_ + k, digits_);
}

std::pair<long long, long long> PAdicScalar::to_rational() const {
    if (zero_) return {0, 1};
    long long unit = 0;
    for (int i = depth() - 1; i >= 0; --i) {
        unit = unit * prime_ + digits_[static_cast<size_t>(i)];
    }
    long long num = unit, den = 1;
    if (valuation_ >= 0) {
        for (int i = 0; i < valuation_; ++i) num *= prime_;
    } else {
        for (int i = 0; i < -valuation_; ++i) den *= prime_;
    }
    return {num, den};
}

PVector::PVector(int prime, std::vector<PAdicScalar> components)
    : prime_(prime), components_(std::move(components)) {
    require_prime(prime_);
    if (components_.empty()) throw std::invalid_argument("PVector needs dim >= 1");
    for (const auto& c : components_) {
        if (c.prime() != prime_) throw std::invalid_argument("mixed primes in PVector");
    }
}

PVector PVector::zero(int prime, int dim) {
    std::vector<PAdicScalar> comps(static_cast<size_t>(dim), PAdicScalar::zero(prime));
    return PVector(prime, std::move(comps));
}

std::optional<int> PVector::norm_exponent() const {
    std::optional<int> best;
    for (const auto& c : components_) {
        if (auto v = c.valuation()) {
            const int k = -*v;
            if (!best || k > *best) best = k;
        }
    }
    return best;
}

double PVector::norm() const {
    const auto k = norm_exponent();
    if (!k) return 0.0;
    return std::pow(static_cast<double>(prime_), static_cast<double>(*k));
}

PVector PVector::add(const PVector& other) const {
    if (prime_ != other.prime_ || dim() != other.dim()) {
        throw std::invalid_argument("PVector shape mismatch");
    }
    std::vector<PAdicScalar> comps;
    comps.reserve(components_.size());
    for (int i = 0; i < dim(); ++i) {
        comps.push_back(components_[static_cast<size_t>(i)].add(other.components_[static_cast<size_t>(i)]));
    }
    return PVector(prime_, std::move(comps));
}

PVector PVector::scaled_by_p_power(int k) const {
    std::vector<PAdicScalar> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.scaled_by_p_power(k));
    return PVector(prime_, std::move(comps));
}

double sphere_measure(int p, int n, int k, double alpha) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    const double pd = static_cast<double>(p);
    return std::pow(pd, static_cast<double>(k) * (n + alpha)) * (1.0 - std::pow(pd, -n));
}

double ball_measure(int p, int n, int gamma, double alpha) {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (alpha <= -static_cast<double>(n)) {
        throw divergence_error("weighted ball measure diverges for alpha <= -n");
    }
    const double pd = static_cast<double>(p);
    return std::pow(pd, static_cast<double>(gamma) * (n + alpha)) * (1.0 - std::pow(pd, -n)) /
           (1.0 - std::pow(pd, -(n + alpha)));
}

double measure(const Region& region, int n, int p, double alpha) {
    if (region.kind == RegionKind::Sphere) return sphere_measure(p, n, region.radius_exponent, alpha);
    return ball_measure(p, n, region.radius_exponent, alpha);
}

} // namespace padic
