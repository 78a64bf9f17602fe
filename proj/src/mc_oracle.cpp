#include "padic/mc_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "padic/rng.hpp"

namespace padic {

namespace {

constexpr int kStrata = 64;

double p_pow(int p, double e) { return std::pow(static_cast<double>(p), e); }

PAdicScalar scalar_from_digits(const std::vector<int>& raw, int p, int base_exponent) {
    size_t first = 0;
    while (first < raw.size() && raw[first] == 0) ++first;
    if (first == raw.size()) return PAdicScalar::zero(p);
    std::vector<int> digits(raw.begin() + static_cast<long>(first), raw.end());
    return PAdicScalar::from_digits(p, base_exponent + static_cast<int>(first), std::move(digits));
}

struct StratumMoments {
    double sum = 0.0;
    double sum_sq = 0.0;
    long count = 0;
};

} // namespace

PVector sample_ball(SplitRng& rng, int p, int n, int gamma, int depth) {
    if (depth < 1) throw std::invalid_argument("sample_ball: depth >= 1 required");
    std::vector<PAdicScalar> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> raw(static_cast<size_t>(depth));
        for (int& d : raw) d = rng.uniform_int(0, p - 1);
        comps.push_back(scalar_from_digits(raw, p, -gamma));
    }
    return PVector(p, std::move(comps));
}

PVector sample_sphere(SplitRng& rng, int p, int n, int gamma) {
    // rejection keeps the draw Haar-uniform on the sphere
    for (int attempt = 0; attempt < 64; ++attempt) {
        PVector v = sample_ball(rng, p, n, gamma, 12);
        if (v.norm_exponent() && *v.norm_exponent() == gamma) return v;
    }
    // vanishing probability; force the leading digit of one coordinate
    std::vector<int> raw(12);
    raw[0] = rng.uniform_int(1, p - 1);
    for (size_t i = 1; i < raw.size(); ++i) raw[i] = rng.uniform_int(0, p - 1);
    std::vector<PAdicScalar> comps;
    comps.push_back(scalar_from_digits(raw, p, -gamma));
    for (int i = 1; i < n; ++i) {
        std::vector<int> more(12);
        for (int& d : more) d = rng.uniform_int(0, p - 1);
        comps.push_back(scalar_from_digits(more, p, -gamma));
    }
    return PVector(p, std::move(comps));
}

McEstimate mc_integral(const std::function<double(const PVector&)>& integrand,
                       const SampleConfig& cfg, int p, int n, double alpha) {
    if (cfg.sample_count < 1) throw std::invalid_argument("mc_integral: sample_count >= 1");
    if (cfg.digit_depth < 8) throw std::invalid_argument("mc_integral: digit_depth >= 8 required");

    std::vector<StratumMoments> strata(kStrata);
    const long base = cfg.sample_count / kStrata;
    const long rem = cfg.sample_count % kStrata;

    auto run_stratum = [&](int s) {
        SplitRng rng = SplitRng(cfg.seed).split("mc-stratum").split(static_cast<std::uint64_t>(s));
        StratumMoments m;
        const long count = base + (s < rem ? 1 : 0);
        for (long i = 0; i < count; ++i) {
            const PVector x = sample_ball(rng, p, n, cfg.ball_exponent, cfg.digit_depth);
            const double fx = integrand(x);
            double contrib = 0.0;
            if (fx != 0.0) {
                const auto k = x.norm_exponent();
                const double w = k ? p_pow(p, alpha * *k) : (alpha == 0.0 ? 1.0 : 0.0);
                contrib = fx * w;
            }
            m.sum += contrib;
            m.sum_sq += contrib * contrib;
            ++m.count;
        }
        strata[static_cast<size_t>(s)] = m;
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (int s = 0; s < kStrata; ++s) run_stratum(s);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                for (int s = t; s < kStrata; s += jobs) run_stratum(s);
            });
        }
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sum_sq = 0.0;
    long count = 0;
    for (const auto& m : strata) {
        sum += m.sum;
        sum_sq += m.sum_sq;
        count += m.count;
    }
    const double mean = sum / static_cast<double>(count);
    const double var = count > 1
                           ? std::max(0.0, (sum_sq - mean * sum) / static_cast<double>(count - 1))
                           : 0.0;
    const double ball = p_pow(p, n * cfg.ball_exponent);
    McEstimate est;
    est.estimate = ball * mean;
    est.stderr_est = ball * std::sqrt(var / static_cast<double>(count));
    est.count = count;
    return est;
}

ShiftReport check_shift_invariance(const std::function<double(const PVector&)>& integrand,
                                   const PVector& shift, const SampleConfig& cfg, int p, int n) {
    SampleConfig base_cfg = cfg;
    base_cfg.seed = SplitRng(cfg.seed).split("shift-base").next_u64();
    SampleConfig shifted_cfg = cfg;
    shifted_cfg.seed = SplitRng(cfg.seed).split("shift-moved").next_u64();

    ShiftReport rep;
    rep.base = mc_integral(integrand, base_cfg, p, n, 0.0);
    rep.shifted = mc_integral(
        [&](const PVector& x) { return integrand(x.add(shift)); }, shifted_cfg, p, n, 0.0);
    const double se = std::hypot(rep.base.stderr_est, rep.shifted.stderr_est);
    rep.z = se > 0.0 ? (rep.base.estimate - rep.shifted.estimate) / se : 0.0;
    return rep;
}

McEstimate mc_pointwise_hausdorff(const KernelSpec& psi, double beta, const RadialFunction& f,
                                  const PVector& x, const SampleConfig& cfg) {
    const int p = f.prime;
    const int n = f.dim;
    SampleConfig ball_cfg = cfg;
    ball_cfg.ball_exponent = f.k_max; // supp f inside B_{k_max} (zero-tail inputs)
    auto integrand = [&](const PVector& y) {
        const double fy = f.eval(y);
        if (fy == 0.0) return 0.0;
        const auto ky = y.norm_exponent();
        if (!ky) return 0.0;
        const PVector dilated = x.scaled_by_p_power(*ky); // x |y|_p
        const auto m = dilated.norm_exponent();
        if (!m) return 0.0;
        const double psi_v = psi.eval(p, *m);
        if (psi_v == 0.0) return 0.0;
        return psi_v * p_pow(p, -(n - beta) * *ky) * fy;
    };
    return mc_integral(integrand, ball_cfg, p, n, 0.0);
}

} // namespace padic
