#include "padic/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "padic/errors.hpp"
#include "padic/summation.hpp"

namespace padic {

namespace {

double p_pow(int p, double e) { return std::pow(static_cast<double>(p), e); }

void check_beta(double beta, int n) {
    if (!(beta >= 0.0 && beta < n)) {
        throw std::invalid_argument("hausdorff operator: beta in [0, n) required");
    }
}

// sum over the tail region k < k_min of psi(p^{l-k}) p^{k beta} t. The kernel
// argument exponent j = l - k runs upward, so only kernels with unbounded
// upper support (TwoSidedPower) reach infinitely many tail shells; their part
// is a geometric series.
double tail_contribution(const KernelSpec& psi, int p, double beta, int l, int k_min,
                         double tail_value, std::vector<double>& terms) {
    if (tail_value == 0.0) return 0.0;
    switch (psi.family()) {
        case KernelSpec::Family::Tabulated:
            throw unsupported_representation_error(
                "tabulated kernel with an infinitely supported input has no exact step form");
        case KernelSpec::Family::PowerCutoff: {
            // psi(p^{l-k}) nonzero only for k >= l
            for (int k = l; k <= k_min - 1; ++k) {
                terms.push_back(p_pow(p, psi.low_exponent() * (l - k) + beta * k) * tail_value);
            }
            return 0.0;
        }
        case KernelSpec::Family::TwoSidedPower: {
            // explicit t <= 1 part: k in [l, k_min-1]
            for (int k = l; k <= k_min - 1; ++k) {
                terms.push_back(p_pow(p, psi.low_exponent() * (l - k) + beta * k) * tail_value);
            }
            // geometric t > 1 part: k <= min(l, k_min) - 1
            const double c = psi.high_decay() + beta;
            if (!(c > 0.0)) {
                throw divergence_error("hausdorff operator: tail shell series diverges");
            }
            const int top = std::min(l, k_min) - 1;
            return tail_value * p_pow(p, -psi.high_decay() * l) * p_pow(p, top * c) /
                   (1.0 - p_pow(p, -c));
        }
    }
    return 0.0;
}

} // namespace

RadialFunction hausdorff_apply(const KernelSpec& psi, double beta, const RadialFunction& f,
                               std::optional<OutputWindow> window) {
    f.validate();
    check_beta(beta, f.dim);
    const int p = f.prime;
    const int lo = window ? window->k_min : f.k_min - kDefaultWindowPad;
    const int hi = window ? window->k_max : f.k_max + kDefaultWindowPad;
    if (hi < lo) throw std::invalid_argument("hausdorff operator: empty output window");

    const double shell_factor = 1.0 - p_pow(p, -f.dim);
    RadialFunction out;
    out.prime = p;
    out.dim = f.dim;
    out.k_min = lo;
    out.k_max = hi;
    out.shell_values.assign(static_cast<size_t>(hi - lo + 1), 0.0);

    for (int l = lo; l <= hi; ++l) {
        std::vector<double> terms;
        terms.reserve(f.shell_values.size() + 4);
        for (int k = f.k_min; k <= f.k_max; ++k) {
            const double g = f.shell(k);
            if (g == 0.0) continue;
            const double psi_v = psi.eval(p, l - k);
            if (psi_v == 0.0) continue;
            terms.push_back(psi_v * p_pow(p, beta * k) * g);
        }
        double closed = tail_contribution(psi, p, beta, l, f.k_min, f.tail_value, terms);
        terms.push_back(closed);
        out.shell_values[static_cast<size_t>(l - lo)] = shell_factor * compensated_total(std::move(terms));
    }

    // exact constant tail: kernels flat near zero (t^0 branch) make every
    // shell below the input support identical for finitely supported inputs
    const bool flat_near_zero = psi.family() != KernelSpec::Family::Tabulated &&
                                psi.low_exponent() == 0.0;
    if (f.tail_value == 0.0 && flat_near_zero) {
        std::vector<double> terms;
        for (int k = f.k_min; k <= f.k_max; ++k) {
            const double g = f.shell(k);
            if (g != 0.0) terms.push_back(p_pow(p, beta * k) * g);
        }
        out.tail_value = shell_factor * compensated_total(std::move(terms));
    } else {
        out.tail_value = 0.0;
    }
    return out;
}

RadialFunction hausdorff_apply(const KernelSpec& psi, const RadialFunction& f,
                               std::optional<OutputWindow> window) {
    return hausdorff_apply(psi, 0.0, f, window);
}

RadialFunction commutator_apply(const RadialSymbol& b, const KernelSpec& psi, double beta,
                                const RadialFunction& f, std::optional<OutputWindow> window) {
    if (b.profile.prime != f.prime || b.profile.dim != f.dim) {
        throw std::invalid_argument("commutator: symbol and function disagree on (p, n)");
    }
    const RadialFunction hf = hausdorff_apply(psi, beta, f, window);

    // b*f on f's window (f vanishes above it; tails multiply)
    RadialFunction bf = f;
    for (int k = f.k_min; k <= f.k_max; ++k) {
        bf.shell_values[static_cast<size_t>(k - f.k_min)] = b.shell(k) * f.shell(k);
    }
    bf.tail_value = b.profile.tail_value * f.tail_value;
    const RadialFunction hbf =
        hausdorff_apply(psi, beta, bf, OutputWindow{hf.k_min, hf.k_max});

    RadialFunction out = hf;
    for (int l = hf.k_min; l <= hf.k_max; ++l) {
        out.shell_values[static_cast<size_t>(l - hf.k_min)] = b.shell(l) * hf.shell(l) - hbf.shell(l);
    }
    out.tail_value = b.profile.tail_value * hf.tail_value - hbf.tail_value;
    return out;
}

PowerMajorant pointwise_majorant(const KernelSpec& psi, double beta, const SpaceParams& sp,
                                 TheoremId which, double f_norm, double b_seminorm) {
    PowerMajorant m;
    const double hoelder_factor =
        std::pow(1.0 - p_pow(sp.p, -sp.n), inv_conjugate_exponent(sp.q));
    switch (which) {
        case TheoremId::Thm3: {
            if (beta != 0.0) throw std::invalid_argument("Thm3 majorant: beta = 0 required");
            const Thm3Constants c = constant_thm3(psi, sp);
            m.coefficient = c.k1_hat * f_norm;
            m.exponent = sp.n * sp.lambda;
            break;
        }
        case TheoremId::Thm4: {
            SpaceParams q = sp;
            q.beta = beta;
            const Thm4Constants c = constant_thm4(psi, q);
            m.coefficient = hoelder_factor * c.d2 * f_norm;
            m.exponent = -(sp.n + sp.gamma) / sp.r;
            break;
        }
        case TheoremId::Thm5: {
            SpaceParams q = sp;
            q.beta = beta;
            const Thm5Constants c = constant_thm5(psi, 1.0, q);
            m.coefficient = hoelder_factor * (c.d_s1 + c.d_s2) * b_seminorm * f_norm;
            m.exponent = -(sp.n + sp.gamma) / sp.r;
            break;
        }
    }
    return m;
}

} // namespace padic
