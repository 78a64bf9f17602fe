// Command-line front end: apply operators, evaluate norms and bound
// constants, run the verification suites and the Monte-Carlo oracle.
// Exit codes: 0 success, 1 verification failure, 2 parameter/parse error,
// 3 divergence.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "padic/constants.hpp"
#include "padic/errors.hpp"
#include "padic/json_io.hpp"
#include "padic/mc_oracle.hpp"
#include "padic/norms.hpp"
#include "padic/operators.hpp"
#include "padic/rng.hpp"
#include "padic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParameter = 2;
constexpr int kExitDivergence = 3;

int default_jobs() {
    if (const char* env = std::getenv("PADIC_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

padic::KernelSpec load_kernel(const std::string& arg) {
    // files end in .json; anything else is the family:param shorthand
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        return padic::parse_kernel_json(padic::read_file(arg));
    }
    return padic::parse_kernel_shorthand(arg);
}

double parse_s(const std::string& text) {
    if (text == "inf" || text == "infinity") return padic::kInf;
    return std::stod(text);
}

int cmd_apply(const std::string& kernel_arg, const std::string& fn_path, double beta,
              const std::string& symbol_path, bool has_window, int window_lo, int window_hi) {
    const padic::KernelSpec psi = load_kernel(kernel_arg);
    const padic::RadialFunction f = padic::parse_radial_function_json(padic::read_file(fn_path));
    std::optional<padic::OutputWindow> window;
    if (has_window) window = padic::OutputWindow{window_lo, window_hi};
    padic::RadialFunction out;
    if (!symbol_path.empty()) {
        const padic::RadialSymbol b =
            padic::parse_radial_symbol_json(padic::read_file(symbol_path));
        out = padic::commutator_apply(b, psi, beta, f, window);
    } else {
        out = padic::hausdorff_apply(psi, beta, f, window);
    }
    std::cout << padic::radial_function_to_json(out) << "\n";
    return kExitOk;
}

int cmd_norm(const std::string& kind, const std::string& fn_path, double q, double s,
             double alpha, double lambda, double delta) {
    double value = 0.0;
    if (kind == "lipschitz") {
        const padic::RadialSymbol b =
            padic::parse_radial_symbol_json(padic::read_file(fn_path));
        value = padic::lipschitz_seminorm(b, delta);
    } else {
        const padic::RadialFunction f =
            padic::parse_radial_function_json(padic::read_file(fn_path));
        if (kind == "lebesgue") {
            value = padic::lebesgue_norm(f, q, alpha);
        } else if (kind == "weak") {
            value = padic::weak_norm(f, q, alpha);
        } else if (kind == "lorentz") {
            value = padic::lorentz_norm(f, q, s, alpha);
        } else if (kind == "morrey") {
            value = padic::central_morrey_norm(f, q, lambda);
        } else if (kind == "weak-morrey") {
            value = padic::weak_central_morrey_norm(f, q, lambda);
        } else {
            throw std::invalid_argument("unknown norm kind '" + kind + "'");
        }
    }
    if (!std::isfinite(value)) throw padic::divergence_error("norm is not finite");
    padic::JsonWriter w;
    w.begin_object();
    w.key("kind").value(kind);
    w.key("value").value(value);
    w.end_object();
    std::cout << w.str() << "\n";
    return kExitOk;
}

int cmd_constants(int thm, const std::string& kernel_arg, const padic::SpaceParams& sp,
                  double b_seminorm) {
    const padic::KernelSpec psi = load_kernel(kernel_arg);
    padic::JsonWriter w;
    w.begin_object();
    w.key("theorem").value(thm);
    w.key("kernel").value(psi.describe());
    if (thm == 3) {
        const auto c = padic::constant_thm3(psi, sp);
        w.key("discrete").begin_object();
        w.key("K1_hat").value(c.k1_hat);
        w.key("D1").value(c.d1);
        w.end_object();
        w.key("paper_form").begin_object();
        if (c.k1_paper) w.key("K1").value(*c.k1_paper);
        w.end_object();
    } else if (thm == 4) {
        const auto c = padic::constant_thm4(psi, sp);
        w.key("discrete").begin_object();
        w.key("K2_hat").value(c.k2_hat);
        w.key("D2").value(c.d2);
        w.end_object();
        w.key("paper_form").begin_object();
        if (c.a_continuous) w.key("A").value(*c.a_continuous);
        if (c.k2_paper) w.key("K2").value(*c.k2_paper);
        w.end_object();
    } else if (thm == 5) {
        const auto c = padic::constant_thm5(psi, b_seminorm, sp);
        w.key("discrete").begin_object();
        w.key("K4_hat").value(c.k4_hat);
        w.key("D_s1").value(c.d_s1);
        w.key("D_s2").value(c.d_s2);
        w.end_object();
        w.key("paper_form").begin_object();
        if (c.k3q_paper) w.key("K3q").value(*c.k3q_paper);
        if (c.k4_paper) w.key("K4").value(*c.k4_paper);
        w.end_object();
    } else {
        throw std::invalid_argument("--thm must be 3, 4 or 5");
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return kExitOk;
}

int cmd_verify(padic::SuiteConfig cfg, const std::string& report_path,
               const std::string& csv_path) {
    const auto results = padic::run_suites(cfg);
    padic::write_file(report_path, padic::report_to_json(results, cfg));
    padic::write_file(csv_path, padic::report_to_csv(results));

    padic::JsonWriter w;
    w.begin_object().newline();
    w.key("suites").begin_array().newline();
    for (const auto& r : results) {
        w.begin_object();
        w.key("suite").value(r.suite);
        w.key("attempted").value(r.summary.attempted);
        w.key("passed").value(r.summary.passed);
        w.key("failed").value(r.summary.failed);
        w.key("degenerate").value(r.summary.degenerate);
        w.key("skipped").value(r.summary.skipped);
        w.key("max_ratio").value(r.summary.max_ratio);
        w.key("stability_change").value(r.summary.stability_change);
        w.end_object().newline();
    }
    w.end_array().newline();
    w.key("all_passed").value(padic::verification_passed(results));
    w.key("report").value(report_path);
    w.key("csv").value(csv_path);
    w.newline().end_object().newline();
    std::cout << w.str();
    return padic::verification_passed(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(const std::string& check, const std::string& fn_path, double alpha, int gamma,
               int depth, long samples, std::uint64_t seed, int jobs,
               const std::string& kernel_arg, double beta, int level, int shift_exponent) {
    padic::SampleConfig cfg;
    cfg.ball_exponent = gamma;
    cfg.digit_depth = depth;
    cfg.sample_count = samples;
    cfg.seed = seed;
    cfg.jobs = jobs;

    const padic::RadialFunction f = padic::parse_radial_function_json(padic::read_file(fn_path));
    padic::JsonWriter w;
    w.begin_object();
    w.key("check").value(check);
    if (check == "integral") {
        const auto est = padic::mc_integral(
            [&](const padic::PVector& x) { return f.eval(x); }, cfg, f.prime, f.dim, alpha);
        const double exact = padic::haar_integral_over_ball(f, alpha, gamma);
        const double z = est.stderr_est > 0.0 ? (est.estimate - exact) / est.stderr_est : 0.0;
        w.key("estimate").value(est.estimate);
        w.key("stderr").value(est.stderr_est);
        w.key("exact").value(exact);
        w.key("z").value(z);
    } else if (check == "shift") {
        padic::SplitRng rng = padic::SplitRng(seed).split("oracle-shift");
        const padic::PVector a = padic::sample_sphere(rng, f.prime, f.dim, shift_exponent);
        const auto rep = padic::check_shift_invariance(
            [&](const padic::PVector& x) { return f.eval(x); }, a, cfg, f.prime, f.dim);
        w.key("estimate").value(rep.base.estimate);
        w.key("shifted_estimate").value(rep.shifted.estimate);
        w.key("stderr").value(rep.base.stderr_est);
        w.key("shifted_stderr").value(rep.shifted.stderr_est);
        w.key("z").value(rep.z);
    } else if (check == "radiality") {
        const padic::KernelSpec psi = load_kernel(kernel_arg);
        padic::SplitRng rng = padic::SplitRng(seed).split("oracle-radiality");
        const padic::PVector x1 = padic::sample_sphere(rng, f.prime, f.dim, level);
        const padic::PVector x2 = padic::sample_sphere(rng, f.prime, f.dim, level);
        padic::SampleConfig c1 = cfg;
        c1.seed = padic::SplitRng(seed).split("rad-1").next_u64();
        padic::SampleConfig c2 = cfg;
        c2.seed = padic::SplitRng(seed).split("rad-2").next_u64();
        const auto e1 = padic::mc_pointwise_hausdorff(psi, beta, f, x1, c1);
        const auto e2 = padic::mc_pointwise_hausdorff(psi, beta, f, x2, c2);
        const double se = std::hypot(e1.stderr_est, e2.stderr_est);
        w.key("estimate_1").value(e1.estimate);
        w.key("estimate_2").value(e2.estimate);
        w.key("stderr_1").value(e1.stderr_est);
        w.key("stderr_2").value(e2.stderr_est);
        w.key("z").value(se > 0.0 ? (e1.estimate - e2.estimate) / se : 0.0);
    } else {
        throw std::invalid_argument("unknown oracle check '" + check + "'");
    }
    w.end_object();
    std::cout << w.str() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic Hausdorff operators: norms, constants, verification"};
    app.require_subcommand(1);

    // apply
    auto* apply = app.add_subcommand("apply", "apply the operator (or commutator) to a function");
    std::string kernel_arg, fn_path, symbol_path;
    double beta = 0.0;
    int window_lo = 0, window_hi = 0;
    apply->add_option("--kernel", kernel_arg, "kernel JSON file or family:param shorthand")
        ->required();
    apply->add_option("--fn", fn_path, "radial function JSON file")->required();
    apply->add_option("--beta", beta, "fractional order in [0, n)");
    apply->add_option("--symbol", symbol_path, "radial symbol JSON file (commutator)");
    auto* wlo = apply->add_option("--window-lo", window_lo, "output window lower exponent");
    auto* whi = apply->add_option("--window-hi", window_hi, "output window upper exponent");

    // norm
    auto* norm = app.add_subcommand("norm", "evaluate a norm functional");
    std::string norm_kind, s_text = "inf";
    double q = 2.0, alpha = 0.0, lambda = -0.5, delta = 0.5;
    norm->add_option("--kind", norm_kind, "lebesgue|weak|lorentz|morrey|weak-morrey|lipschitz")
        ->required();
    norm->add_option("--fn", fn_path, "radial function/symbol JSON file")->required();
    norm->add_option("--q", q, "primary exponent");
    norm->add_option("--s", s_text, "Lorentz secondary exponent (number or 'inf')");
    norm->add_option("--alpha", alpha, "weight exponent");
    norm->add_option("--lambda", lambda, "central Morrey exponent");
    norm->add_option("--delta", delta, "Lipschitz order");

    // constants
    auto* constants = app.add_subcommand("constants", "discrete and paper-form bound constants");
    int thm = 4;
    padic::SpaceParams sp;
    double b_seminorm = 1.0;
    constants->add_option("--thm", thm, "theorem selector: 3, 4 or 5")->required();
    constants->add_option("--kernel", kernel_arg, "kernel JSON file or shorthand")->required();
    constants->add_option("--p", sp.p, "prime");
    constants->add_option("--n", sp.n, "dimension");
    constants->add_option("--q", sp.q, "source exponent");
    constants->add_option("--r", sp.r, "target exponent");
    constants->add_option("--alpha", sp.alpha, "source weight exponent");
    constants->add_option("--gamma", sp.gamma, "target weight exponent");
    constants->add_option("--beta", sp.beta, "fractional order");
    constants->add_option("--delta", sp.delta, "Lipschitz order (thm 5)");
    constants->add_option("--lambda", sp.lambda, "Morrey exponent (thm 3)");
    constants->add_option("--b-seminorm", b_seminorm, "symbol seminorm factor (thm 5)");

    // verify
    auto* verify = app.add_subcommand("verify", "run randomized certification suites");
    std::string suite = "all", config_path, report_path = "report.json", csv_path = "report.csv";
    padic::SuiteConfig vcfg;
    vcfg.jobs = default_jobs();
    long long seed_ll = 0;
    int trials = 0;
    int vjobs = default_jobs();
    double vtol = 1e-9;
    verify->add_option("--suite", suite, "all|thm3|thm4_weak|thm4_strong|thm5_weak|thm5_strong");
    verify->add_option("--config", config_path, "SuiteConfig JSON file");
    auto* opt_trials =
        verify->add_option("--trials", trials, "weak-suite trial count (strong suites run half)");
    auto* opt_seed = verify->add_option("--seed", seed_ll, "master seed");
    auto* opt_jobs =
        verify->add_option("--jobs", vjobs, "worker threads (default: PADIC_JOBS or 1)");
    auto* opt_tol = verify->add_option("--tol", vtol, "ratio tolerance");
    verify->add_option("--report", report_path, "JSON report path");
    verify->add_option("--csv", csv_path, "CSV report path");
    bool timings = false;
    verify->add_flag("--timings", timings, "include per-trial wall times in the report");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Monte-Carlo estimates and invariance checks");
    std::string check = "integral";
    int o_gamma = 0, o_depth = 12, o_level = 0, o_shift = -1;
    long o_samples = 100000;
    long long o_seed = 0;
    int o_jobs = default_jobs();
    double o_alpha = 0.0, o_beta = 0.0;
    oracle->add_option("--check", check, "integral|shift|radiality")->required();
    oracle->add_option("--fn", fn_path, "radial function JSON file")->required();
    oracle->add_option("--alpha", o_alpha, "weight exponent (integral)");
    oracle->add_option("--gamma", o_gamma, "sampled ball exponent");
    oracle->add_option("--depth", o_depth, "digit depth");
    oracle->add_option("--samples", o_samples, "sample count");
    oracle->add_option("--seed", o_seed, "seed");
    oracle->add_option("--jobs", o_jobs, "worker threads");
    oracle->add_option("--kernel", kernel_arg, "kernel (radiality)");
    oracle->add_option("--beta", o_beta, "fractional order (radiality)");
    oracle->add_option("--level", o_level, "norm exponent of the probe points (radiality)");
    oracle->add_option("--shift-exponent", o_shift, "norm exponent of the shift (shift)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return kExitParameter;
    }

    try {
        if (apply->parsed()) {
            const bool has_window = wlo->count() > 0 && whi->count() > 0;
            return cmd_apply(kernel_arg, fn_path, beta, symbol_path, has_window, window_lo,
                             window_hi);
        }
        if (norm->parsed()) {
            return cmd_norm(norm_kind, fn_path, q, parse_s(s_text), alpha, lambda, delta);
        }
        if (constants->parsed()) return cmd_constants(thm, kernel_arg, sp, b_seminorm);
        if (verify->parsed()) {
            if (!config_path.empty()) {
                vcfg = padic::parse_suite_config_json(padic::read_file(config_path));
            } else {
                vcfg.jobs = vjobs;
            }
            if (opt_trials->count() > 0 && trials > 0) {
                vcfg.trials_weak = trials;
                vcfg.trials_strong = std::max(1, trials / 2);
            }
            if (opt_seed->count() > 0) vcfg.seed = static_cast<std::uint64_t>(seed_ll);
            if (opt_jobs->count() > 0) vcfg.jobs = vjobs;
            if (opt_tol->count() > 0) vcfg.tolerance = vtol;
            vcfg.include_timings = timings;
            if (suite != "all") vcfg.suites = {suite};
            return cmd_verify(vcfg, report_path, csv_path);
        }
        if (oracle->parsed()) {
            return cmd_oracle(check, fn_path, o_alpha, o_gamma, o_depth, o_samples,
                              static_cast<std::uint64_t>(o_seed), o_jobs, kernel_arg, o_beta,
                              o_level, o_shift);
        }
    } catch (const padic::divergence_error& e) {
        std::cerr << "divergence: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const padic::unsupported_representation_error& e) {
        std::cerr << "unsupported representation: " << e.what() << "\n";
        return kExitParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameter;
    }
    return kExitParameter;
}
