#include "padic/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "padic/errors.hpp"
#include "padic/summation.hpp"

namespace padic {

namespace {

double p_pow(int p, double e) { return std::pow(static_cast<double>(p), e); }

// sum_{j <= 0} p^{j c} = 1 / (1 - p^{-c}), c > 0
double lower_geometric(int p, double c) {
    if (!(c > 0.0)) {
        throw divergence_error("kernel moment: lower shell sum diverges (exponent " +
                               std::to_string(c) + " <= 0)");
    }
    return 1.0 / (1.0 - p_pow(p, -c));
}

// sum_{j >= 1} p^{-j c} = p^{-c} / (1 - p^{-c}), c > 0
double upper_geometric(int p, double c) {
    if (!(c > 0.0)) {
        throw divergence_error("kernel moment: upper shell sum diverges (exponent " +
                               std::to_string(c) + " >= 0)");
    }
    return p_pow(p, -c) / (1.0 - p_pow(p, -c));
}

} // namespace

KernelMoment kernel_moment(const KernelSpec& psi, int p, double s, double w) {
    if (!(w >= 1.0)) throw std::invalid_argument("kernel_moment: w >= 1 required");
    KernelMoment m;
    m.s = s;
    m.w = w;
    switch (psi.family()) {
        case KernelSpec::Family::Tabulated: {
            std::vector<double> terms;
            for (const auto& [j, v] : psi.table()) {
                if (v != 0.0) terms.push_back(std::pow(v, w) * p_pow(p, j * s));
            }
            m.discrete_sum = compensated_total(std::move(terms));
            break;
        }
        case KernelSpec::Family::PowerCutoff: {
            const double c = w * psi.low_exponent() + s;
            m.discrete_sum = lower_geometric(p, c);
            m.continuous_integral = 1.0 / c;
            break;
        }
        case KernelSpec::Family::TwoSidedPower: {
            const double cl = w * psi.low_exponent() + s;
            const double cu = w * psi.high_decay() - s;
            m.discrete_sum = lower_geometric(p, cl) + upper_geometric(p, cu);
            m.continuous_integral = 1.0 / cl + 1.0 / cu;
            break;
        }
    }
    if (!std::isfinite(m.discrete_sum)) throw divergence_error("kernel moment is not finite");
    return m;
}

double kernel_sup_moment(const KernelSpec& psi, int p, double s) {
    switch (psi.family()) {
        case KernelSpec::Family::Tabulated: {
            double sup = 0.0;
            for (const auto& [j, v] : psi.table()) sup = std::max(sup, v * p_pow(p, j * s));
            return sup;
        }
        case KernelSpec::Family::PowerCutoff: {
            const double c = psi.low_exponent() + s;
            if (c < 0.0) throw divergence_error("kernel sup moment unbounded as t -> 0");
            return 1.0; // max over j <= 0 of p^{j c} at j = 0
        }
        case KernelSpec::Family::TwoSidedPower: {
            const double cl = psi.low_exponent() + s;
            const double cu = psi.high_decay() - s;
            if (cl < 0.0) throw divergence_error("kernel sup moment unbounded as t -> 0");
            if (cu < 0.0) throw divergence_error("kernel sup moment unbounded as t -> inf");
            return std::max(1.0, p_pow(p, -cu));
        }
    }
    return 0.0;
}

std::optional<double> thm5_combined_integral(const KernelSpec& psi, const SpaceParams& sp) {
    if (psi.family() == KernelSpec::Family::Tabulated) return std::nullopt;
    const double qp = conjugate_exponent(sp.q);
    const double s1 = (sp.n + sp.alpha) * (qp - 1.0) - sp.beta * qp;
    const double s2 = s1 - sp.delta * qp;
    // max(1, t^{-delta q'}) picks the s2 integrand on (0,1] and s1 on (1,inf)
    const double cl = qp * psi.low_exponent() + s2;
    if (!(cl > 0.0)) throw divergence_error("combined integrand diverges near 0");
    double total = 1.0 / cl;
    if (psi.family() == KernelSpec::Family::TwoSidedPower) {
        const double cu = qp * psi.high_decay() - s1;
        if (!(cu > 0.0)) throw divergence_error("combined integrand diverges near infinity");
        total += 1.0 / cu;
    }
    return total;
}

Thm3Constants constant_thm3(const KernelSpec& psi, const SpaceParams& sp) {
    if (!(sp.q >= 1.0)) throw std::invalid_argument("constant_thm3: q >= 1 required");
    if (!(sp.lambda >= -1.0 / sp.q && sp.lambda < 0.0)) {
        throw std::invalid_argument("constant_thm3: lambda in [-1/q, 0) required");
    }
    const double s = -static_cast<double>(sp.n) * sp.lambda;
    const KernelMoment mom = kernel_moment(psi, sp.p, s, 1.0);
    Thm3Constants out;
    out.d1 = mom.discrete_sum;
    const double factor = std::pow(1.0 - p_pow(sp.p, -sp.n), inv_conjugate_exponent(sp.q));
    out.k1_hat = factor * out.d1;
    if (mom.continuous_integral) out.k1_paper = factor * *mom.continuous_integral;
    return out;
}

namespace {

void check_thm4_params(const SpaceParams& sp) {
    if (!(sp.q >= 1.0 && sp.r >= 1.0)) throw std::invalid_argument("q, r >= 1 required");
    if (!(sp.beta >= 0.0 && sp.beta < sp.n)) throw std::invalid_argument("beta in [0, n) required");
    if (!(std::min(sp.alpha, sp.gamma) > -static_cast<double>(sp.n))) {
        throw std::invalid_argument("min(alpha, gamma) > -n required");
    }
    if (!thm4_balance_holds(sp)) {
        throw std::invalid_argument("balance (n+alpha)/q - beta = (n+gamma)/r violated");
    }
}

// D(s/q') for q > 1 via the q'-th root of the Hoelder moment; for q = 1 the
// moment degenerates to the sup with the limit exponent s/q' -> s_inf.
double holder_moment_root(const KernelSpec& psi, const SpaceParams& sp, double s_over_qprime,
                          std::optional<double>* continuous_root = nullptr) {
    if (sp.q == 1.0) {
        if (continuous_root) *continuous_root = std::nullopt;
        return kernel_sup_moment(psi, sp.p, s_over_qprime);
    }
    const double qp = conjugate_exponent(sp.q);
    const KernelMoment mom = kernel_moment(psi, sp.p, s_over_qprime * qp, qp);
    if (continuous_root) {
        *continuous_root = mom.continuous_integral
                               ? std::optional<double>(std::pow(*mom.continuous_integral, 1.0 / qp))
                               : std::nullopt;
    }
    return std::pow(mom.discrete_sum, 1.0 / qp);
}

double gamma_ratio_factor(const SpaceParams& sp) {
    return std::pow((1.0 - p_pow(sp.p, -sp.n)) / (1.0 - p_pow(sp.p, -(sp.n + sp.gamma))),
                    1.0 / sp.r);
}

} // namespace

Thm4Constants constant_thm4(const KernelSpec& psi, const SpaceParams& sp) {
    check_thm4_params(sp);
    Thm4Constants out;
    const double s_over_qp = (sp.n + sp.alpha) / sp.q - sp.beta; // = (n+gamma)/r
    std::optional<double> a_cont;
    out.d2 = holder_moment_root(psi, sp, s_over_qp, &a_cont);
    out.a_continuous = a_cont;
    const double factor = gamma_ratio_factor(sp) *
                          std::pow(1.0 - p_pow(sp.p, -sp.n), inv_conjugate_exponent(sp.q));
    out.k2_hat = factor * out.d2;
    if (a_cont) out.k2_paper = factor * *a_cont;
    return out;
}

Thm5Constants constant_thm5(const KernelSpec& psi, double b_seminorm, const SpaceParams& sp) {
    if (!(sp.q > 1.0 && sp.r > 1.0)) throw std::invalid_argument("constant_thm5: q, r > 1 required");
    if (!(sp.delta > 0.0 && sp.delta < 1.0)) {
        throw std::invalid_argument("constant_thm5: delta in (0, 1) required");
    }
    if (!(sp.beta >= 0.0 && sp.beta < sp.n)) throw std::invalid_argument("beta in [0, n) required");
    if (!(std::min(sp.alpha, sp.gamma) > -static_cast<double>(sp.n))) {
        throw std::invalid_argument("min(alpha, gamma) > -n required");
    }
    if (!thm5_balance_holds(sp)) {
        throw std::invalid_argument("balance (beta+delta) - (n+alpha)/q = -(n+gamma)/r violated");
    }
    if (!(b_seminorm >= 0.0) || std::isinf(b_seminorm)) {
        throw std::invalid_argument("constant_thm5: finite nonnegative b seminorm required");
    }
    Thm5Constants out;
    const double u = (sp.n + sp.alpha) / sp.q;
    out.d_s1 = holder_moment_root(psi, sp, u - sp.beta);
    out.d_s2 = holder_moment_root(psi, sp, u - sp.beta - sp.delta);
    const double factor = gamma_ratio_factor(sp) *
                          std::pow(1.0 - p_pow(sp.p, -sp.n), inv_conjugate_exponent(sp.q));
    out.k4_hat = factor * (out.d_s1 + out.d_s2) * b_seminorm;
    if (auto k3q = thm5_combined_integral(psi, sp)) {
        out.k3q_paper = k3q;
        out.k4_paper = *k3q * gamma_ratio_factor(sp) * (1.0 - p_pow(sp.p, -sp.n)) * b_seminorm;
    }
    return out;
}

std::pair<double, double> interpolation_exponents(double q1, double r1, double q2, double r2,
                                                  double theta) {
    if (!(q1 >= 1.0 && q1 < q2)) throw std::invalid_argument("need 1 <= q1 < q2");
    if (r1 == r2) throw std::invalid_argument("need r1 != r2");
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("need theta in (0, 1)");
    const double q = 1.0 / ((1.0 - theta) / q1 + theta / q2);
    const double r = 1.0 / ((1.0 - theta) / r1 + theta / r2);
    return {q, r};
}

double solve_balance(TheoremId which, const SpaceParams& known, BalanceUnknown unknown) {
    if (which == TheoremId::Thm3) {
        throw std::invalid_argument("solve_balance: Thm3 has no balance relation");
    }
    const double n = known.n;
    const double u = (n + known.alpha) / known.q;
    const double shift = (which == TheoremId::Thm5) ? known.delta : 0.0;
    // both theorems read u - beta - shift = (n+gamma)/r
    double value = 0.0;
    switch (unknown) {
        case BalanceUnknown::R: {
            const double lhs = u - known.beta - shift;
            if (lhs <= 0.0) throw std::invalid_argument("solve_balance: no admissible r");
            value = (n + known.gamma) / lhs;
            if (!(value >= 1.0)) throw std::invalid_argument("solve_balance: r < 1");
            break;
        }
        case BalanceUnknown::Gamma: {
            value = known.r * (u - known.beta - shift) - n;
            if (!(value > -n)) throw std::invalid_argument("solve_balance: gamma <= -n");
            break;
        }
        case BalanceUnknown::Beta: {
            value = u - shift - (n + known.gamma) / known.r;
            if (!(value >= 0.0 && value < n)) {
                throw std::invalid_argument("solve_balance: beta outside [0, n)");
            }
            break;
        }
        case BalanceUnknown::Delta: {
            if (which != TheoremId::Thm5) {
                throw std::invalid_argument("solve_balance: delta only appears in Thm5");
            }
            value = u - known.beta - (n + known.gamma) / known.r;
            if (!(value > 0.0 && value < 1.0)) {
                throw std::invalid_argument("solve_balance: delta outside (0, 1)");
            }
            break;
        }
    }
    return value;
}

} // namespace padic
