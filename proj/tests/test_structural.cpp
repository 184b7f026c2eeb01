#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chowlab/instances.hpp"
#include "chowlab/structural.hpp"
#include "test_util.hpp"

using namespace chowlab;

TEST_CASE("sort_weights removes zeros and keeps suffix norms monotone") {
    const std::vector<double> w{0.0, -4.0, 1.0, 0.0, 2.0};
    const SortedWeights s = sort_weights(w);
    CHECK(s.w == std::vector<double>{-4.0, 2.0, 1.0});
    CHECK(s.index == std::vector<std::size_t>{1, 4, 2});
    CHECK(s.sigma[0] == doctest::Approx(std::sqrt(21.0)));
    CHECK(s.sigma[2] == 1.0);
    for (std::size_t k = 0; k + 1 < s.sigma.size(); ++k) CHECK(s.sigma[k] >= s.sigma[k + 1]);

    CHECK_THROWS_AS(sort_weights(std::vector<double>{0.0, 0.0}), ParamError);
}

TEST_CASE("is_tau_regular examples") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(is_tau_regular(std::vector<double>{r, r}, 0.8));
    CHECK_FALSE(is_tau_regular(std::vector<double>{1.0, 0.0, 0.0}, 0.5));
    // boundary inclusive: 4/5 == 0.8
    CHECK(is_tau_regular(std::vector<double>{3.0, 4.0}, 0.8));
}

TEST_CASE("critical_index examples") {
    CHECK(critical_index(std::vector<double>{1.0, 1.0, 1.0, 1.0}, 0.6) == 1);
    CHECK_FALSE(critical_index(std::vector<double>{8.0, 4.0, 2.0, 1.0}, 0.5).has_value());

    // equal-weight vectors are 1/sqrt(n)-regular
    for (int n : {2, 5, 9}) {
        const std::vector<double> w(n, 0.7);
        CHECK(critical_index(w, 1.0 / std::sqrt(static_cast<double>(n)) + 1e-12) == 1);
    }
}

TEST_CASE("critical_index is scale invariant") {
    Xoshiro rng(derive_seed(51, 0));
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        const auto w = testutil::random_weight_profile(n, rng.next());
        const double tau = 0.1 + 0.6 * rng.uniform();
        auto lam = (rng.uniform() - 0.5) * 20.0;
        if (lam == 0.0) lam = 3.0;
        std::vector<double> scaled(w);
        for (double& x : scaled) x *= lam;
        CHECK(critical_index(w, tau) == critical_index(scaled, tau));
    }
}

TEST_CASE("the tail beyond the critical index is regular") {
    Xoshiro rng(derive_seed(52, 0));
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        const auto w = testutil::random_weight_profile(n, rng.next());
        const double tau = 0.1 + 0.6 * rng.uniform();
        const auto c = critical_index(w, tau);
        if (!c || *c > sort_weights(w).size()) continue;
        const SortedWeights s = sort_weights(w);
        const std::vector<double> tail(s.w.begin() + (*c - 1), s.w.end());
        CHECK(is_tau_regular(tail, tau));
    }
}

TEST_CASE("check_small_tail examples") {
    CHECK(check_small_tail(std::vector<double>{8.0, 4.0, 2.0, 1.0}, 0.5));
    // c = 1: no index in range, vacuously true
    CHECK(check_small_tail(std::vector<double>{1.0, 1.0}, 0.9));
}

TEST_CASE("check_small_tail holds on random vectors") {
    Xoshiro rng(derive_seed(53, 0));
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(30));
        const auto w = testutil::random_weight_profile(n, rng.next());
        for (double tau : {0.1, 0.3, 0.5}) CHECK(check_small_tail(w, tau));
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Ltf f = random_ltf_gaussian(12, derive_seed(54, s));
        CHECK(check_small_tail(f.weights, 0.3));
    }
}

TEST_CASE("anticoncentration on the flat vector") {
    const int n = 100;
    std::vector<double> w(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const auto r = anticoncentration_check(w, 0.1, -0.1, 0.1, 100000, 7);
    CHECK(r.bound == doctest::Approx(0.4));
    // true mass is Pr[sum x_i = 0] = C(100,50)/2^100 = 0.0796
    CHECK(r.empirical == doctest::Approx(0.0796).epsilon(0.15));
    CHECK(r.pass);

    // empty interval
    const auto e = anticoncentration_check(w, 0.1, 0.3, 0.3, 1000, 7);
    CHECK(e.empirical == 0.0);
    CHECK(e.pass);

    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(anticoncentration_check(w, 0.1, -inf, 0.1, 10, 7), ParamError);
    CHECK_THROWS_AS(anticoncentration_check(std::vector<double>{1.0, 0.1}, 0.1, 0.0, 1.0, 10, 7),
                    ParamError);  // not 0.1-regular
}

TEST_CASE("probe pairs") {
    const Ltf f = majority(5);
    const TruthTable ft = tabulate(f);
    const auto same = dchow_vs_dist_probe(f, ft);
    CHECK(same.first == 0.0);
    CHECK(same.second == 0.0);

    const auto flipped = dchow_vs_dist_probe(f, testutil::negate(ft));
    const ChowVector cf = chow_exact(ft);
    CHECK(flipped.first == doctest::Approx(2.0 * chow_distance(cf, ChowVector{{0, 0, 0, 0, 0, 0}})));
    CHECK(flipped.second == 2.0);

    Xoshiro rng(derive_seed(55, 0));
    for (int trial = 0; trial < 50; ++trial) {
        const Ltf g = random_ltf_gaussian(10, rng.next());
        const TruthTable gt = tabulate(g);
        const TruthTable noisy = flip_fraction(gt, 0.05, rng.next());
        const auto p = dchow_vs_dist_probe(g, noisy);
        CHECK(p.first <= 2.0 * std::sqrt(p.second) + 1e-9);
    }
}
