#include "padic/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "padic/rng.hpp"

namespace padic {

RadialFunction RadialFunction::zero(int prime, int dim) {
    return RadialFunction{prime, dim, 0, 0, {0.0}, 0.0};
}

RadialFunction RadialFunction::indicator_sphere(int prime, int dim, int k) {
    return RadialFunction{prime, dim, k, k, {1.0}, 0.0};
}

RadialFunction RadialFunction::indicator_ball(int prime, int dim, int gamma) {
    return RadialFunction{prime, dim, gamma, gamma, {1.0}, 1.0};
}

double RadialFunction::shell(int k) const {
    if (k > k_max) return 0.0;
    if (k < k_min) return tail_value;
    return shell_values[static_cast<size_t>(k - k_min)];
}

double RadialFunction::eval(const PVector& v) const {
    const auto k = v.norm_exponent();
    if (!k) return tail_value; // |v|_p = 0 lies below every shell
    return shell(*k);
}

bool RadialFunction::is_identically_zero() const {
    if (tail_value != 0.0) return false;
    return std::all_of(shell_values.begin(), shell_values.end(), [](double v) { return v == 0.0; });
}

void RadialFunction::validate() const {
    if (!is_prime(prime)) throw std::invalid_argument("RadialFunction: prime required");
    if (dim < 1) throw std::invalid_argument("RadialFunction: dim >= 1 required");
    if (k_max < k_min) throw std::invalid_argument("RadialFunction: empty window");
    if (shell_values.size() != static_cast<size_t>(k_max - k_min + 1)) {
        throw std::invalid_argument("RadialFunction: shell_values size must match window");
    }
    for (double v : shell_values) {
        if (!std::isfinite(v)) throw std::invalid_argument("RadialFunction: non-finite shell value");
    }
    if (!std::isfinite(tail_value)) throw std::invalid_argument("RadialFunction: non-finite tail");
}

RadialFunction pointwise_combine(const RadialFunction& f, const RadialFunction& h,
                                 CombineOp op, double scalar) {
    if (f.prime != h.prime || f.dim != h.dim) {
        throw std::invalid_argument("pointwise_combine: mismatched (p, n)");
    }
    RadialFunction out;
    out.prime = f.prime;
    out.dim = f.dim;
    out.k_min = std::min(f.k_min, h.k_min);
    out.k_max = std::max(f.k_max, h.k_max);
    out.shell_values.assign(static_cast<size_t>(out.k_max - out.k_min + 1), 0.0);
    for (int k = out.k_min; k <= out.k_max; ++k) {
        const double a = f.shell(k), b = h.shell(k);
        out.shell_values[static_cast<size_t>(k - out.k_min)] =
            scalar * (op == CombineOp::Add ? a + b : a * b);
    }
    out.tail_value = scalar * (op == CombineOp::Add ? f.tail_value + h.tail_value
                                                    : f.tail_value * h.tail_value);
    return out;
}

RadialFunction scale(const RadialFunction& f, double c) {
    RadialFunction out = f;
    for (double& v : out.shell_values) v *= c;
    out.tail_value *= c;
    return out;
}

KernelSpec KernelSpec::tabulated(std::map<int, double> values) {
    if (values.empty()) throw std::invalid_argument("tabulated kernel needs at least one entry");
    KernelSpec k;
    k.family_ = Family::Tabulated;
    for (auto& [j, v] : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("tabulated kernel: non-finite value");
        k.table_[j] = std::abs(v);
    }
    return k;
}

KernelSpec KernelSpec::power_cutoff(double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("power_cutoff: non-finite exponent");
    KernelSpec k;
    k.family_ = Family::PowerCutoff;
    k.a_ = a;
    return k;
}

KernelSpec KernelSpec::two_sided_power(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("two_sided_power: non-finite exponents");
    }
    KernelSpec k;
    k.family_ = Family::TwoSidedPower;
    k.a_ = a;
    k.b_ = b;
    return k;
}

int KernelSpec::j_min() const {
    if (family_ != Family::Tabulated) throw std::logic_error("j_min: tabulated kernels only");
    return table_.begin()->first;
}

int KernelSpec::j_max() const {
    if (family_ != Family::Tabulated) throw std::logic_error("j_max: tabulated kernels only");
    return table_.rbegin()->first;
}

double KernelSpec::eval(int p, int j) const {
    const double pd = static_cast<double>(p);
    switch (family_) {
        case Family::Tabulated: {
            auto it = table_.find(j);
            return it == table_.end() ? 0.0 : it->second;
        }
        case Family::PowerCutoff:
            return j <= 0 ? std::pow(pd, a_ * j) : 0.0;
        case Family::TwoSidedPower:
            return j <= 0 ? std::pow(pd, a_ * j) : std::pow(pd, -b_ * j);
    }
    return 0.0;
}

bool KernelSpec::vanishes_above_one() const {
    switch (family_) {
        case Family::Tabulated:
            return j_max() <= 0;
        case Family::PowerCutoff:
            return true;
        case Family::TwoSidedPower:
            return false;
    }
    return false;
}

std::string KernelSpec::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Tabulated: {
            os << "tabulated:";
            bool first = true;
            for (const auto& [j, v] : table_) {
                if (!first) os << ",";
                os << j << "=" << v;
                first = false;
            }
            break;
        }
        case Family::PowerCutoff:
            os << "powercutoff:" << a_;
            break;
        case Family::TwoSidedPower:
            os << "twosided:" << a_ << "," << b_;
            break;
    }
    return os.str();
}

RadialSymbol RadialSymbol::constant(double c, int prime, int dim) {
    RadialSymbol b;
    b.profile = RadialFunction{prime, dim, 0, 0, {c}, c};
    b.value_at_zero = c;
    return b;
}

RadialSymbol RadialSymbol::power(double delta, int prime, int dim, int k_min, int k_max) {
    RadialSymbol b;
    b.profile.prime = prime;
    b.profile.dim = dim;
    b.profile.k_min = k_min;
    b.profile.k_max = k_max;
    b.profile.shell_values.resize(static_cast<size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k) {
        b.profile.shell_values[static_cast<size_t>(k - k_min)] =
            std::pow(static_cast<double>(prime), delta * k);
    }
    b.profile.tail_value = 0.0;
    b.value_at_zero = 0.0;
    return b;
}

double RadialSymbol::eval(const PVector& v) const {
    const auto k = v.norm_exponent();
    if (!k) return value_at_zero;
    return shell(*k);
}

double lipschitz_seminorm(const RadialSymbol& b, double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("lipschitz_seminorm: delta must lie in (0, 1]");
    }
    const RadialFunction& pr = b.profile;
    if (pr.tail_value != b.value_at_zero) {
        // |b(h) - b(0)| / |h|^delta blows up as |h| -> 0
        return std::numeric_limits<double>::infinity();
    }
    const double pd = static_cast<double>(pr.prime);
    double sup = 0.0;
    // Exponents above the window repeat the last shell value, so any m beyond
    // k_max pairs the same numerators with a larger denominator and is
    // dominated. j = k_min - 1 stands for the whole tail.
    for (int m = pr.k_min; m <= pr.k_max; ++m) {
        const double bm = b.shell(m);
        const double denom = std::pow(pd, delta * m);
        double num = std::abs(bm - b.value_at_zero);
        for (int j = pr.k_min - 1; j < m; ++j) {
            num = std::max(num, std::abs(bm - b.shell(j)));
        }
        sup = std::max(sup, num / denom);
    }
    return sup;
}

RadialFunction random_radial(int prime, int dim, int k_min, int k_max,
                             double value_min, double value_max,
                             std::uint64_t seed, bool signed_values) {
    if (k_max < k_min) throw std::invalid_argument("random_radial: empty window");
    if (!(value_min > 0.0 && value_max >= value_min)) {
        throw std::invalid_argument("random_radial: need 0 < value_min <= value_max");
    }
    SplitRng rng(seed);
    RadialFunction f;
    f.prime = prime;
    f.dim = dim;
    f.k_min = k_min;
    f.k_max = k_max;
    f.shell_values.resize(static_cast<size_t>(k_max - k_min + 1));
    for (double& v : f.shell_values) {
        v = rng.log_uniform(value_min, value_max);
        if (signed_values && rng.bernoulli(0.5)) v = -v;
    }
    f.tail_value = 0.0;
    f.validate();
    return f;
}

} // namespace padic
