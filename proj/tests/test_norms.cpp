#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "padic/errors.hpp"
#include "padic/norms.hpp"
#include "padic/rng.hpp"

using namespace padic;

namespace {

RadialFunction draw(SplitRng& rng, int p = 0, int n = 0) {
    const int primes[] = {2, 3, 5};
    if (p == 0) p = primes[rng.uniform_int(0, 2)];
    if (n == 0) n = rng.uniform_int(1, 2);
    const int lo = rng.uniform_int(-6, 3);
    const int len = rng.uniform_int(1, 6);
    return random_radial(p, n, lo, lo + len - 1, 1e-2, 1e2, rng.next_u64());
}

} // namespace

TEST_CASE("haar integral closed forms") {
    CHECK(haar_integral(RadialFunction::indicator_sphere(2, 1, 0), 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));

    SplitRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = trial % 2 == 0 ? 2 : 5;
        const int n = 1 + trial % 2;
        const int g = rng.uniform_int(-6, 6);
        CHECK(haar_integral(RadialFunction::indicator_ball(p, n, g), 0.0) ==
              doctest::Approx(std::pow(static_cast<double>(p), n * g)).epsilon(1e-12));
    }

    // two-shell sum: g(1)=1 on S_0, g(2)=2 on S_1 over Q_2
    const RadialFunction two{2, 1, 0, 1, {1.0, 2.0}, 0.0};
    CHECK(haar_integral(two, 0.0) == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("haar integral rejects divergent tails") {
    const auto ball = RadialFunction::indicator_ball(2, 1, 0);
    CHECK_THROWS_AS(haar_integral(ball, -1.0), divergence_error);
}

TEST_CASE("lebesgue norm basic values and homogeneity") {
    const auto ball = RadialFunction::indicator_ball(3, 1, 0);
    for (double q : {1.0, 2.0, 3.5}) {
        CHECK(lebesgue_norm(ball, q, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(lebesgue_norm(RadialFunction::indicator_sphere(2, 1, 0), 1.0, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));

    SplitRng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 2.0);
        CHECK(lebesgue_norm(scale(f, 3.0), q, alpha) ==
              doctest::Approx(3.0 * lebesgue_norm(f, q, alpha)).epsilon(1e-12));
    }
}

TEST_CASE("distribution function values and boundary strictness") {
    const auto ball = RadialFunction::indicator_ball(2, 1, 0);
    CHECK(distribution(ball, 0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(distribution(ball, 1.0, 0.0) == 0.0);

    const RadialFunction two{2, 1, 0, 1, {1.0, 2.0}, 0.0};
    CHECK(distribution(two, 0.9, 0.0) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("distribution is nonincreasing and right-continuous on grids") {
    SplitRng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = draw(rng);
        const double alpha = rng.uniform(-0.5, 1.5);
        double prev = distribution(f, 0.0, alpha);
        for (int i = 1; i <= 60; ++i) {
            const double lam = 1e-3 * std::pow(1.3, i);
            const double cur = distribution(f, lam, alpha);
            CHECK(cur <= prev * (1 + 1e-15));
            // right-continuity: value at lam equals the limit from above
            CHECK(distribution(f, lam * (1 + 1e-12), alpha) ==
                  doctest::Approx(cur).epsilon(1e-12));
            prev = cur;
        }
    }
}

TEST_CASE("rearrangement of simple step functions") {
    const auto ball = RadialFunction::indicator_ball(2, 1, 0);
    const auto r1 = rearrangement(ball, 0.0);
    REQUIRE(r1.steps.size() == 1);
    CHECK(r1.steps[0].value == 1.0);
    CHECK(r1.steps[0].width == doctest::Approx(1.0).epsilon(1e-14));

    const RadialFunction f{2, 1, 0, 1, {2.0, 1.0}, 0.0};
    const auto r2 = rearrangement(f, 0.0);
    REQUIRE(r2.steps.size() == 2);
    CHECK(r2.steps[0].value == 2.0);
    CHECK(r2.steps[0].width == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r2.steps[1].value == 1.0);
    CHECK(r2.steps[1].width == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("equimeasurability: rearrangement and distribution agree at all levels") {
    SplitRng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = draw(rng);
        const double alpha = rng.uniform(-0.5, 2.0);
        const auto r = rearrangement(f, alpha);

        std::vector<double> probes;
        probes.push_back(r.steps.front().value * 1.5);
        for (size_t i = 0; i < r.steps.size(); ++i) {
            const double hi = r.steps[i].value;
            const double lo = i + 1 < r.steps.size() ? r.steps[i + 1].value : 0.0;
            probes.push_back(0.5 * (hi + lo));
        }
        for (double lam : probes) {
            // measure{t : f*(t) > lam} from the step widths
            double measure_star = 0.0;
            for (const auto& st : r.steps) {
                if (st.value > lam) measure_star += st.width;
            }
            CHECK(measure_star == doctest::Approx(distribution(f, lam, alpha)).epsilon(1e-12));
        }
    }
}

TEST_CASE("weak norm exact values and Chebyshev") {
    const auto ball = RadialFunction::indicator_ball(5, 1, 0);
    for (double q : {1.0, 2.0, 3.0}) {
        CHECK(weak_norm(ball, q, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    }

    const RadialFunction f{2, 1, 0, 1, {1.0, 2.0}, 0.0};
    CHECK(weak_norm(f, 1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    SplitRng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 2.0);
        CHECK(weak_norm(g, q, alpha) <= lebesgue_norm(g, q, alpha) * (1 + 1e-12));
    }
}

TEST_CASE("lorentz norm of the unit ball is 1 for every (q, s)") {
    const auto ball = RadialFunction::indicator_ball(3, 2, 0);
    for (double q : {1.0, 2.0, 3.0}) {
        for (double s : {1.0, 2.0, 7.0, kInf}) {
            CHECK(lorentz_norm(ball, q, s, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("L^{q,q} = L^q identity on random functions") {
    SplitRng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 2.0);
        const double lhs = lorentz_norm(f, q, q, alpha);
        const double rhs = lebesgue_norm(f, q, alpha);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("L^{q,inf} = weak-L^q identity on random functions") {
    SplitRng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 2.0);
        CHECK(lorentz_norm(f, q, kInf, alpha) ==
              doctest::Approx(weak_norm(f, q, alpha)).epsilon(1e-12));
    }
}

TEST_CASE("weak Lorentz norm is dominated by every finite-s Lorentz norm") {
    SplitRng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double alpha = rng.uniform(-0.5, 1.5);
        const double weak = lorentz_norm(f, q, kInf, alpha);
        for (double s : {1.0, 2.0, 3.7, 7.0}) {
            CHECK(weak <= lorentz_norm(f, q, s, alpha) * (1 + 1e-12));
        }
    }
}

TEST_CASE("central Morrey norm: edge lambda = -1/q recovers L^q") {
    SplitRng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        CHECK(central_morrey_norm(f, q, -1.0 / q) ==
              doctest::Approx(lebesgue_norm(f, q, 0.0)).epsilon(1e-12));
        CHECK(weak_central_morrey_norm(f, q, -1.0 / q) ==
              doctest::Approx(weak_norm(f, q, 0.0)).epsilon(1e-12));
    }
}

TEST_CASE("central Morrey norm of the unit ball is 1 inside the range") {
    SplitRng rng(53);
    for (int p : {2, 3, 5}) {
        for (int n : {1, 2}) {
            const auto ball = RadialFunction::indicator_ball(p, n, 0);
            for (int i = 0; i < 10; ++i) {
                const double q = rng.uniform(1.0, 4.0);
                const double lambda = rng.uniform(-1.0 / q + 1e-3, -1e-3);
                CHECK(central_morrey_norm(ball, q, lambda) ==
                      doctest::Approx(1.0).epsilon(1e-12));
                CHECK(weak_central_morrey_norm(ball, q, lambda) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("weak central Morrey <= central Morrey; both homogeneous") {
    SplitRng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = draw(rng);
        const double q = rng.uniform(1.0, 4.0);
        const double lambda = rng.uniform(-1.0 / q, -1e-3);
        const double strong = central_morrey_norm(f, q, lambda);
        const double weak = weak_central_morrey_norm(f, q, lambda);
        CHECK(weak <= strong * (1 + 1e-12));
        CHECK(central_morrey_norm(scale(f, 2.5), q, lambda) ==
              doctest::Approx(2.5 * strong).epsilon(1e-12));
        CHECK(weak_central_morrey_norm(scale(f, 2.5), q, lambda) ==
              doctest::Approx(2.5 * weak).epsilon(1e-12));
    }
}

TEST_CASE("all five norms vanish exactly on the zero function") {
    const auto z = RadialFunction::zero(3, 2);
    CHECK(lebesgue_norm(z, 2.0, 0.5) == 0.0);
    CHECK(weak_norm(z, 2.0, 0.5) == 0.0);
    CHECK(lorentz_norm(z, 2.0, 3.0, 0.5) == 0.0);
    CHECK(central_morrey_norm(z, 2.0, -0.25) == 0.0);
    CHECK(weak_central_morrey_norm(z, 2.0, -0.25) == 0.0);
}

TEST_CASE("nonzero tails enter every functional through closed forms") {
    // f = indicator of B_0 has tail 1: norms over Q_2 agree with hand values
    const auto ball = RadialFunction::indicator_ball(2, 1, 0);
    // integral of |f| with alpha = 1: sum_{k<=0} 2^{2k} * (1/2) = 2/3
    CHECK(haar_integral(ball, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(distribution(ball, 0.5, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    const auto r = rearrangement(ball, 1.0);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].width == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("alpha = 0 reduces weighted functionals to unweighted sphere sums") {
    SplitRng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = draw(rng);
        double direct = 0.0;
        for (int k = f.k_min; k <= f.k_max; ++k) {
            direct += f.shell(k) * sphere_measure(f.prime, f.dim, k, 0.0);
        }
        CHECK(haar_integral(f, 0.0) == doctest::Approx(direct).epsilon(1e-12));
    }
}
