// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criterion 10 drives the installed CLI binary (path via --cli).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "padic/constants.hpp"
#include "padic/json_io.hpp"
#include "padic/mc_oracle.hpp"
#include "padic/norms.hpp"
#include "padic/operators.hpp"
#include "padic/rng.hpp"
#include "padic/verify.hpp"

using namespace padic;

namespace {

int g_failures = 0;
std::string g_cli;
std::filesystem::path g_dir;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
};

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(secs < budget_seconds, "runtime " + std::to_string(secs) + "s over budget");
    if (c.ok) {
        std::printf("PASS  criterion %2d: %s (%.2fs)\n", number, name.c_str(), secs);
    } else {
        std::printf("FAIL  criterion %2d: %s (%.2fs) -- %s\n", number, name.c_str(), secs,
                    c.detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct RunOut {
    int exit_code = -1;
    std::string out;
};

RunOut run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunOut r;
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void criterion_measures(Check& c) {
    SplitRng rng(20260810);
    const int primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 100; ++i) {
        const int p = primes[rng.uniform_int(0, 5)];
        const int n = rng.uniform_int(1, 4);
        const int g = rng.uniform_int(-40, 40);
        const double pd = p;
        c.require(close_rel(ball_measure(p, n, g), std::pow(pd, n * g), 1e-12),
                  "ball measure mismatch");
        c.require(close_rel(sphere_measure(p, n, g),
                            std::pow(pd, n * g) * (1 - std::pow(pd, -n)), 1e-12),
                  "sphere measure mismatch");
    }
    for (int i = 0; i < 100; ++i) {
        const int p = primes[rng.uniform_int(0, 2)];
        const int n = rng.uniform_int(1, 3);
        const int g = rng.uniform_int(-10, 10);
        const int span = rng.uniform_int(0, 8);
        const double alpha = rng.uniform(-0.9 * n, 3.0);
        double total = ball_measure(p, n, g - span - 1, alpha);
        for (int k = g - span; k <= g; ++k) total += sphere_measure(p, n, k, alpha);
        c.require(close_rel(total, ball_measure(p, n, g, alpha), 1e-12),
                  "Haar additivity violated");
    }
}

void criterion_worked_instance(Check& c) {
    const auto psi = KernelSpec::power_cutoff(0.0);
    const auto f = RadialFunction::indicator_sphere(2, 1, 0);
    const auto hf = hausdorff_apply(psi, 0.0, f);
    for (int l = hf.k_min; l <= hf.k_max; ++l) {
        c.require(hf.shell(l) == (l <= 0 ? 0.5 : 0.0), "H chi_S0 is not 0.5 chi_B0");
    }
    c.require(hf.tail_value == 0.5, "tail of H chi_S0 must be exactly 0.5");

    SpaceParams sp;
    sp.p = 2;
    sp.n = 1;
    sp.q = 2.0;
    sp.r = 2.0;
    sp.alpha = 0.0;
    sp.gamma = 0.0;
    sp.beta = 0.0;
    const double lhs = weak_norm(hf, sp.r, sp.gamma);
    const double rhs = constant_thm4(psi, sp).k2_hat * lebesgue_norm(f, sp.q, sp.alpha);
    c.require(close_rel(lhs, 0.5, 1e-12), "lhs != 0.5");
    c.require(std::abs(rhs - 0.70711) <= 1e-5, "rhs != 0.70711");
    c.require(lhs / rhs <= 1.0 + 1e-9, "worked trial does not pass");
}

void criterion_thm3(Check& c) {
    SuiteConfig cfg;
    cfg.seed = 3;
    cfg.trials_weak = 200;
    cfg.jobs = 4;
    const auto res = verify_thm3(cfg);
    c.require(res.summary.attempted == 200, "expected 200 trials");
    c.require(res.summary.failed == 0, "thm3 suite has failures");
    c.require(10 * res.summary.skipped < res.summary.attempted, "too many skips");
    bool edge = false;
    for (const auto& rec : res.records) {
        if (rec.skipped) continue;
        c.require(rec.ratio <= 1.0 + 1e-9, "ratio above 1 + 1e-9");
        c.require(rec.majorant_ok, "pointwise majorant violated");
        if (rec.params.lambda == -1.0 / rec.params.q) edge = true;
    }
    c.require(edge, "lambda = -1/q edge never sampled");
}

void criterion_thm4(Check& c) {
    SuiteConfig cfg;
    cfg.seed = 4;
    cfg.trials_weak = 200;
    cfg.jobs = 4;
    const auto res = verify_thm4_weak(cfg);
    c.require(res.summary.attempted == 200, "expected 200 trials");
    c.require(res.summary.failed == 0, "thm4 weak suite has failures");
    c.require(10 * res.summary.skipped < res.summary.attempted, "too many skips");
    for (const auto& rec : res.records) {
        if (rec.skipped || rec.degenerate) continue;
        c.require(rec.ratio <= 1.0 + 1e-9, "weak-norm ratio above 1 + 1e-9");
        SpaceParams sp = rec.params;
        c.require(thm4_balance_holds(sp, 1e-9), "balance not enforced");
    }
}

void criterion_thm5(Check& c) {
    SuiteConfig cfg;
    cfg.seed = 5;
    cfg.trials_weak = 200;
    cfg.jobs = 4;
    const auto res = verify_thm5_weak(cfg);
    c.require(res.summary.attempted == 200, "expected 200 trials");
    c.require(res.summary.failed == 0, "thm5 weak suite has failures");
    c.require(10 * res.summary.skipped < res.summary.attempted, "too many skips");
    bool power = false, table = false, degenerate = false;
    for (const auto& rec : res.records) {
        if (rec.skipped) continue;
        if (rec.symbol == "power-law") power = true;
        if (rec.symbol == "modulated-table") table = true;
        if (rec.degenerate) {
            degenerate = true;
            c.require(rec.pass, "degenerate trial not passed by convention");
        } else {
            c.require(rec.ratio <= 1.0 + 1e-9, "commutator ratio above 1 + 1e-9");
        }
    }
    c.require(power && table && degenerate, "symbol family coverage incomplete");
}

void criterion_strong(Check& c) {
    SuiteConfig cfg;
    cfg.seed = 6;
    cfg.trials_weak = 100;
    cfg.trials_strong = 100;
    cfg.jobs = 4;

    const auto weak4 = verify_thm4_weak(cfg);
    const auto strong4 = verify_thm4_strong(cfg);
    const auto weak5 = verify_thm5_weak(cfg);
    const auto strong5 = verify_thm5_strong(cfg);

    for (const auto* suite : {&strong4, &strong5}) {
        c.require(suite->summary.attempted == 100, "expected 100 strong trials");
        c.require(suite->summary.failed == 0, suite->suite + " has failures");
        c.require(suite->summary.stability_ok, suite->suite + " max ratio moved more than 5%");
        bool saw[5] = {false, false, false, false, false};
        for (const auto& rec : suite->records) {
            if (rec.skipped) continue;
            if (!rec.degenerate) {
                c.require(std::isfinite(rec.ratio) && std::isfinite(rec.ratio_enlarged),
                          "non-finite strong ratio");
            }
            saw[rec.index % 5] = true;
        }
        c.require(saw[0] && saw[1] && saw[2] && saw[3] && saw[4],
                  "s grid {1,2,q,7,inf} not fully exercised");
    }

    // s = inf rows coincide with the weak rows of the same trial index
    auto compare = [&](const SuiteResult& strong, const SuiteResult& weak) {
        for (const auto& rec : strong.records) {
            if (rec.skipped || !std::isinf(rec.params.s)) continue;
            const auto& wrec = weak.records[static_cast<size_t>(rec.index)];
            if (wrec.skipped || rec.degenerate || wrec.degenerate) continue;
            c.require(close_rel(rec.lhs, wrec.lhs, 1e-12),
                      "s=inf Lorentz row deviates from the weak row");
        }
    };
    compare(strong4, weak4);
    compare(strong5, weak5);
}

void criterion_norm_crosschecks(Check& c) {
    SplitRng rng(7070);
    for (int trial = 0; trial < 100; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 5;
        const int n = 1 + trial % 2;
        const int lo = rng.uniform_int(-6, 3);
        const auto f =
            random_radial(p, n, lo, lo + rng.uniform_int(0, 5), 1e-2, 1e2, rng.next_u64());
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 2.0);
        c.require(close_rel(lorentz_norm(f, q, q, alpha), lebesgue_norm(f, q, alpha), 1e-12),
                  "L^{q,q} != L^q");
        c.require(close_rel(lorentz_norm(f, q, kInf, alpha), weak_norm(f, q, alpha), 1e-12),
                  "L^{q,inf} != weak-L^q");

        const auto r = rearrangement(f, alpha);
        std::vector<double> probes{r.steps.front().value * 2};
        for (size_t i = 0; i < r.steps.size(); ++i) {
            const double hi = r.steps[i].value;
            const double lo2 = i + 1 < r.steps.size() ? r.steps[i + 1].value : 0.0;
            probes.push_back(0.5 * (hi + lo2));
        }
        for (double lam : probes) {
            double measure_star = 0.0;
            for (const auto& st : r.steps) {
                if (st.value > lam) measure_star += st.width;
            }
            c.require(close_rel(measure_star, distribution(f, lam, alpha), 1e-12),
                      "equimeasurability violated");
        }
    }
}

void criterion_oracle(Check& c) {
    SplitRng rng(808);
    int within = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 3;
        const int n = 1 + trial % 2;
        const int gamma = rng.uniform_int(0, 2);
        const int lo = rng.uniform_int(-4, 0);
        const auto f =
            random_radial(p, n, lo, lo + rng.uniform_int(0, 3), 0.1, 10.0, rng.next_u64());
        const double alpha = rng.uniform(-0.4 * n, 1.5);
        SampleConfig scfg;
        scfg.ball_exponent = gamma;
        scfg.sample_count = 100000;
        scfg.digit_depth = 14;
        scfg.seed = rng.next_u64();
        scfg.jobs = 4;
        const auto est =
            mc_integral([&](const PVector& x) { return f.eval(x); }, scfg, p, n, alpha);
        const double exact = haar_integral_over_ball(f, alpha, gamma);
        if (std::abs(est.estimate - exact) <= 3 * std::max(est.stderr_est, 1e-300)) ++within;
    }
    c.require(within >= 47, "oracle agreement below 47/50 (" + std::to_string(within) + ")");

    int shift_ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 5;
        const int n = 1 + trial % 2;
        const int glo = rng.uniform_int(-3, 0);
        const auto f =
            random_radial(p, n, glo, glo + rng.uniform_int(0, 2), 0.1, 10.0, rng.next_u64());
        SampleConfig scfg;
        scfg.ball_exponent = 1;
        scfg.sample_count = 60000;
        scfg.digit_depth = 12;
        scfg.seed = rng.next_u64();
        scfg.jobs = 4;
        const PVector a = sample_sphere(rng, p, n, rng.uniform_int(-3, 1));
        const auto rep =
            check_shift_invariance([&](const PVector& x) { return f.eval(x); }, a, scfg, p, n);
        if (std::abs(rep.z) <= 3.0) ++shift_ok;
    }
    c.require(shift_ok >= 47, "shift invariance below 47/50 (" + std::to_string(shift_ok) + ")");

    int radial_ok = 0;
    const int radial_total = 20;
    for (int trial = 0; trial < radial_total; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 3;
        const int n = 1 + trial % 2;
        const auto f = random_radial(p, n, -2, 1, 0.1, 5.0, rng.next_u64());
        const auto psi = KernelSpec::power_cutoff(trial % 2 == 0 ? 0.0 : 0.5);
        const int level = rng.uniform_int(-2, 2);
        const PVector x1 = sample_sphere(rng, p, n, level);
        const PVector x2 = sample_sphere(rng, p, n, level);
        SampleConfig c1;
        c1.sample_count = 50000;
        c1.seed = rng.next_u64();
        c1.jobs = 4;
        SampleConfig c2 = c1;
        c2.seed = rng.next_u64();
        const auto e1 = mc_pointwise_hausdorff(psi, 0.0, f, x1, c1);
        const auto e2 = mc_pointwise_hausdorff(psi, 0.0, f, x2, c2);
        const double se = std::hypot(e1.stderr_est, e2.stderr_est);
        const double z = se > 0 ? (e1.estimate - e2.estimate) / se : 0.0;
        if (std::abs(z) <= 3.0) ++radial_ok;
    }
    c.require(radial_ok >= radial_total - 2, "operator radiality check failed");
}

void criterion_lipschitz(Check& c) {
    SplitRng rng(909);
    for (int p : {2, 3, 5}) {
        for (double delta : {0.25, 0.5, 0.8}) {
            const auto b = RadialSymbol::power(delta, p, 1, -8, 8);
            c.require(close_rel(lipschitz_seminorm(b, delta), 1.0, 1e-12),
                      "|x|^delta seminorm != 1");
        }
    }
    for (int sym = 0; sym < 6; ++sym) {
        const int p = sym % 2 == 0 ? 2 : 3;
        const int n = 1 + sym % 2;
        const double delta = rng.uniform(0.2, 0.9);
        RadialSymbol b;
        if (sym < 3) {
            b = RadialSymbol::power(delta, p, n, -5, 5);
        } else {
            b.profile = random_radial(p, n, -4, 4, 0.2, 5.0, rng.next_u64(), true);
            b.value_at_zero = 0.0;
        }
        const double closed = lipschitz_seminorm(b, delta);
        for (int i = 0; i < 10000; ++i) {
            const int m = rng.uniform_int(b.profile.k_min - 2, b.profile.k_max + 2);
            const PVector h = sample_sphere(rng, p, n, m);
            const PVector x = rng.bernoulli(0.15)
                                  ? PVector::zero(p, n)
                                  : sample_sphere(rng, p, n, rng.uniform_int(m - 6, m));
            const double num = std::abs(b.eval(x.add(h)) - b.eval(x));
            const double ratio = num / std::pow(static_cast<double>(p), delta * m);
            c.require(ratio <= closed * (1 + 1e-12), "sampled ratio exceeds the closed form");
        }
    }
}

void criterion_determinism(Check& c) {
    const std::string rep1 = (g_dir / "all_j1.json").string();
    const std::string rep8 = (g_dir / "all_j8.json").string();
    const std::string csv1 = (g_dir / "all_j1.csv").string();
    const std::string csv8 = (g_dir / "all_j8.csv").string();
    const auto r1 = run_cli("verify --suite all --seed 7 --jobs 1 --report " + rep1 +
                            " --csv " + csv1);
    c.require(r1.exit_code == 0, "verify --jobs 1 exited " + std::to_string(r1.exit_code));
    const auto r8 = run_cli("verify --suite all --seed 7 --jobs 8 --report " + rep8 +
                            " --csv " + csv8);
    c.require(r8.exit_code == 0, "verify --jobs 8 exited " + std::to_string(r8.exit_code));
    c.require(read_file(rep1) == read_file(rep8), "JSON reports differ across job counts");
    c.require(read_file(csv1) == read_file(csv8), "CSV reports differ across job counts");
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    }
    if (g_cli.empty()) {
        if (const char* env = std::getenv("PADIC_CLI")) g_cli = env;
    }
    g_dir = std::filesystem::temp_directory_path() / "padic_acceptance";
    std::filesystem::create_directories(g_dir);

    criterion(1, "exact measure identities and Haar additivity", 1.0, criterion_measures);
    criterion(2, "worked operator instance and weak-type trial", 1.0, criterion_worked_instance);
    criterion(3, "theorem 3.1 suite (200 trials, lambda edge included)", 30.0, criterion_thm3);
    criterion(4, "theorem 4.1 suite (200 trials, balance via solver)", 30.0, criterion_thm4);
    criterion(5, "theorem 5.1 suite (200 trials, symbol families)", 60.0, criterion_thm5);
    criterion(6, "theorems 4.2/5.2 strong suites (stability, s grid)", 60.0, criterion_strong);
    criterion(7, "norm functional cross-checks", 10.0, criterion_norm_crosschecks);
    criterion(8, "Monte-Carlo oracle agreement", 120.0, criterion_oracle);
    criterion(9, "Lipschitz seminorm closed form vs sampling", 30.0, criterion_lipschitz);
    if (g_cli.empty()) {
        std::printf("FAIL  criterion 10: determinism (no --cli path provided)\n");
        ++g_failures;
    } else {
        criterion(10, "byte-identical verify reports across job counts", 120.0,
                  criterion_determinism);
    }

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
