#include "padic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "padic/errors.hpp"
#include "padic/summation.hpp"

namespace padic {

double StepRearrangement::total_measure() const {
    NeumaierSum acc;
    for (const auto& st : steps) acc.add(st.width);
    return acc.value();
}

double StepRearrangement::eval(double t) const {
    double cum = 0.0;
    for (const auto& st : steps) {
        cum += st.width;
        if (t < cum) return st.value;
    }
    return 0.0;
}

double conjugate_exponent(double q) {
    if (!(q > 1.0)) throw std::invalid_argument("conjugate_exponent: q > 1 required");
    return q / (q - 1.0);
}

double inv_conjugate_exponent(double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("inv_conjugate_exponent: q >= 1 required");
    return 1.0 - 1.0 / q;
}

bool thm4_balance_holds(const SpaceParams& sp, double tol) {
    const double lhs = (sp.n + sp.alpha) / sp.q - sp.beta;
    const double rhs = (sp.n + sp.gamma) / sp.r;
    return std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

bool thm5_balance_holds(const SpaceParams& sp, double tol) {
    const double lhs = (sp.beta + sp.delta) - (sp.n + sp.alpha) / sp.q;
    const double rhs = -(sp.n + sp.gamma) / sp.r;
    return std::abs(lhs - rhs) <= tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

namespace {

double p_pow(int p, double e) { return std::pow(static_cast<double>(p), e); }

// weighted measure of the shell S_k
double shell_w(const RadialFunction& f, int k, double alpha) {
    return p_pow(f.prime, k * (f.dim + alpha)) * (1.0 - p_pow(f.prime, -f.dim));
}

// weighted measure of the tail ball B_{k_min-1}; infinite for alpha <= -n
double tail_ball_w(const RadialFunction& f, double alpha) {
    if (f.dim + alpha <= 0.0) return kInf;
    return p_pow(f.prime, (f.k_min - 1) * (f.dim + alpha)) * (1.0 - p_pow(f.prime, -f.dim)) /
           (1.0 - p_pow(f.prime, -(f.dim + alpha)));
}

// shell/tail integral of v(k) = transform(g(p^k)) against |x|^alpha over all
// shells k <= cap (cap = INT_MAX for the whole space)
double integral_impl(const RadialFunction& f, double alpha,
                     const std::function<double(double)>& transform, long cap) {
    f.validate();
    std::vector<double> terms;
    terms.reserve(f.shell_values.size() + 1);
    for (int k = f.k_min; k <= f.k_max; ++k) {
        if (k > cap) break;
        const double v = transform(f.shell(k));
        if (v != 0.0) terms.push_back(v * shell_w(f, k, alpha));
    }
    const double tv = transform(f.tail_value);
    if (tv != 0.0) {
        if (f.dim + alpha <= 0.0) {
            throw divergence_error("haar integral: nonzero tail with alpha <= -n diverges");
        }
        const int top = static_cast<int>(std::min<long>(cap, f.k_min - 1));
        terms.push_back(tv * p_pow(f.prime, top * (f.dim + alpha)) *
                        (1.0 - p_pow(f.prime, -f.dim)) / (1.0 - p_pow(f.prime, -(f.dim + alpha))));
    }
    return compensated_total(std::move(terms));
}

constexpr long kNoCap = std::numeric_limits<long>::max();

// distinct positive candidate levels |g(p^k)|, |tail|
std::vector<double> candidate_levels(const RadialFunction& f) {
    std::vector<double> levels;
    for (double v : f.shell_values) {
        if (v != 0.0) levels.push_back(std::abs(v));
    }
    if (f.tail_value != 0.0) levels.push_back(std::abs(f.tail_value));
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

double distribution_impl(const RadialFunction& f, double lambda, double alpha, bool strict) {
    f.validate();
    auto counted = [&](double v) {
        const double a = std::abs(v);
        return strict ? a > lambda : a >= lambda;
    };
    std::vector<double> terms;
    for (int k = f.k_min; k <= f.k_max; ++k) {
        if (counted(f.shell(k))) terms.push_back(shell_w(f, k, alpha));
    }
    if (f.tail_value != 0.0 && counted(f.tail_value)) {
        const double tb = tail_ball_w(f, alpha);
        if (std::isinf(tb)) return kInf;
        terms.push_back(tb);
    }
    return compensated_total(std::move(terms));
}

} // namespace

double haar_integral(const RadialFunction& f, double alpha) {
    return integral_impl(f, alpha, [](double v) { return v; }, kNoCap);
}

double haar_integral_over_ball(const RadialFunction& f, double alpha, int gamma) {
    return integral_impl(f, alpha, [](double v) { return v; }, gamma);
}

double lebesgue_norm(const RadialFunction& f, double q, double alpha) {
    if (!(q > 0.0)) throw std::invalid_argument("lebesgue_norm: q > 0 required");
    const double integral =
        integral_impl(f, alpha, [q](double v) { return std::pow(std::abs(v), q); }, kNoCap);
    return std::pow(integral, 1.0 / q);
}

double distribution(const RadialFunction& f, double lambda, double alpha) {
    if (lambda < 0.0) throw std::invalid_argument("distribution: lambda >= 0 required");
    return distribution_impl(f, lambda, alpha, /*strict=*/true);
}

double distribution_geq(const RadialFunction& f, double lambda, double alpha) {
    if (!(lambda > 0.0)) throw std::invalid_argument("distribution_geq: lambda > 0 required");
    return distribution_impl(f, lambda, alpha, /*strict=*/false);
}

StepRearrangement rearrangement(const RadialFunction& f, double alpha) {
    f.validate();
    // group shells by |value|, descending
    std::map<double, double, std::greater<>> width_by_value;
    for (int k = f.k_min; k <= f.k_max; ++k) {
        const double v = std::abs(f.shell(k));
        if (v != 0.0) width_by_value[v] += shell_w(f, k, alpha);
    }
    if (f.tail_value != 0.0) {
        const double tb = tail_ball_w(f, alpha);
        if (std::isinf(tb)) {
            throw divergence_error("rearrangement: nonzero tail has infinite weighted measure");
        }
        width_by_value[std::abs(f.tail_value)] += tb;
    }
    StepRearrangement r;
    r.steps.reserve(width_by_value.size());
    for (const auto& [v, w] : width_by_value) r.steps.push_back({v, w});
    return r;
}

double weak_norm(const RadialFunction& f, double q, double alpha) {
    if (!(q > 0.0)) throw std::invalid_argument("weak_norm: q > 0 required");
    double best = 0.0;
    for (double v : candidate_levels(f)) {
        const double mu = distribution_geq(f, v, alpha);
        if (std::isinf(mu)) return kInf;
        best = std::max(best, v * std::pow(mu, 1.0 / q));
    }
    return best;
}

double lorentz_norm(const RadialFunction& f, double q, double s, double alpha) {
    if (!(q > 0.0)) throw std::invalid_argument("lorentz_norm: q > 0 required");
    if (!(s >= 1.0)) throw std::invalid_argument("lorentz_norm: s >= 1 required");
    const StepRearrangement r = rearrangement(f, alpha);
    if (r.steps.empty()) return 0.0;

    // cumulative breakpoints T_i and the s = infinity value M = max v_i T_i^{1/q}
    const size_t m = r.steps.size();
    std::vector<double> cum(m);
    {
        NeumaierSum acc;
        for (size_t i = 0; i < m; ++i) {
            acc.add(r.steps[i].width);
            cum[i] = acc.value();
        }
    }
    std::vector<double> vt(m);
    double big = 0.0;
    for (size_t i = 0; i < m; ++i) {
        vt[i] = r.steps[i].value * std::pow(cum[i], 1.0 / q);
        big = std::max(big, vt[i]);
    }
    if (std::isinf(s)) return big;

    // sum_i v_i^s (T_i^{s/q} - T_{i-1}^{s/q}) rescaled by M^s so no
    // intermediate overflows for large supports or s
    std::vector<double> terms(m);
    for (size_t i = 0; i < m; ++i) {
        const double head = std::pow(vt[i] / big, s);
        const double inner = (i == 0) ? 0.0 : std::pow(cum[i - 1] / cum[i], s / q);
        terms[i] = head * (1.0 - inner);
    }
    return big * std::pow(compensated_total(std::move(terms)), 1.0 / s);
}

namespace {

// sup over gamma of scale(gamma) * inner(gamma)^{1/q}: the supremand is
// monotone outside [k_min-2, k_max+2], so that window plus the analytic
// gamma -> +inf limit (nonzero only at lambda = -1/q) is exhaustive.
double morrey_sup(const RadialFunction& f, double q, double lambda,
                  const std::function<double(int)>& supremand, double global_limit) {
    double best = global_limit;
    for (int g = f.k_min - 2; g <= f.k_max + 2; ++g) {
        best = std::max(best, supremand(g));
    }
    (void)lambda;
    (void)q;
    return best;
}

void check_morrey_params(double q, double lambda) {
    if (!(q >= 1.0)) throw std::invalid_argument("central Morrey: q >= 1 required");
    if (!(lambda >= -1.0 / q && lambda < 0.0)) {
        throw std::invalid_argument("central Morrey: lambda in [-1/q, 0) required");
    }
}

} // namespace

double central_morrey_norm(const RadialFunction& f, double q, double lambda) {
    check_morrey_params(q, lambda);
    f.validate();
    auto supremand = [&](int g) {
        const double local = integral_impl(
            f, 0.0, [q](double v) { return std::pow(std::abs(v), q); }, g);
        return p_pow(f.prime, -f.dim * g * (lambda + 1.0 / q)) * std::pow(local, 1.0 / q);
    };
    const bool edge = std::abs(lambda + 1.0 / q) <= 1e-14;
    const double limit = edge ? lebesgue_norm(f, q, 0.0) : 0.0;
    return morrey_sup(f, q, lambda, supremand, limit);
}

double weak_central_morrey_norm(const RadialFunction& f, double q, double lambda) {
    check_morrey_params(q, lambda);
    f.validate();
    const auto levels = candidate_levels(f);
    auto supremand = [&](int g) {
        double inner = 0.0;
        for (double v : levels) {
            std::vector<double> terms;
            for (int k = f.k_min; k <= g && k <= f.k_max; ++k) {
                if (std::abs(f.shell(k)) >= v) terms.push_back(shell_w(f, k, 0.0));
            }
            if (f.tail_value != 0.0 && std::abs(f.tail_value) >= v) {
                terms.push_back(p_pow(f.prime, f.dim * std::min(g, f.k_min - 1)));
            }
            inner = std::max(inner, v * std::pow(compensated_total(std::move(terms)), 1.0 / q));
        }
        return p_pow(f.prime, -f.dim * g * (lambda + 1.0 / q)) * inner;
    };
    const bool edge = std::abs(lambda + 1.0 / q) <= 1e-14;
    const double limit = edge ? weak_norm(f, q, 0.0) : 0.0;
    return morrey_sup(f, q, lambda, supremand, limit);
}

} // namespace padic
