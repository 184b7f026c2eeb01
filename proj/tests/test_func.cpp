#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chowlab/chow.hpp"
#include "chowlab/func.hpp"
#include "chowlab/instances.hpp"
#include "test_util.hpp"

using namespace chowlab;

TEST_CASE("eval_ltf dictator and boundary") {
    Ltf dict{{1.0}, 0.0};
    CHECK(eval_ltf(dict, std::vector<int>{+1}) == +1);
    CHECK(eval_ltf(dict, std::vector<int>{-1}) == -1);

    // argument exactly zero resolves to +1
    Ltf andf{{1.0, 1.0}, 2.0};
    CHECK(eval_ltf(andf, std::vector<int>{+1, +1}) == +1);
    CHECK(eval_ltf(andf, std::vector<int>{+1, -1}) == -1);

    CHECK_THROWS_AS(eval_ltf(dict, std::vector<int>{+1, -1}), DimensionError);
    CHECK_THROWS_AS(eval_ltf(dict, std::vector<int>{0}), ParamError);
}

TEST_CASE("project_p1 values and properties") {
    CHECK(project_p1(0.5) == 0.5);
    CHECK(project_p1(3.0) == 1.0);
    CHECK(project_p1(-2.0) == -1.0);

    Xoshiro rng(derive_seed(11, 0));
    for (int i = 0; i < 2000; ++i) {
        const double a = (rng.uniform() - 0.5) * 8.0;
        const double b = (rng.uniform() - 0.5) * 8.0;
        CHECK(std::fabs(project_p1(a)) <= 1.0);
        if (std::fabs(a) <= 1.0) CHECK(project_p1(a) == a);
        CHECK(std::fabs(project_p1(a) - project_p1(b)) <= std::fabs(a - b));
    }
}

TEST_CASE("eval_lbf examples and range") {
    Lbf half{0.5, {0, 1}};
    CHECK(eval_lbf(half, std::vector<int>{+1}) == 0.5);

    Lbf sat{1.0, {0, 2}};
    CHECK(eval_lbf(sat, std::vector<int>{+1}) == 1.0);

    Lbf zero{1.0, {0, 0}};
    CHECK(eval_lbf(zero, std::vector<int>{+1}) == 0.0);
    CHECK(eval_lbf(zero, std::vector<int>{-1}) == 0.0);

    Xoshiro rng(derive_seed(12, 0));
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Lbf g = testutil::random_lbf(n, rng.next(), 0.3, 5);
        const auto x = testutil::random_point(n, rng);
        const double val = eval_lbf(g, x);
        CHECK(val >= -1.0);
        CHECK(val <= 1.0);
    }
}

TEST_CASE("tabulate fixed examples") {
    const TruthTable dict = tabulate(Ltf{{1.0}, 0.0});
    CHECK(dict.values == std::vector<double>{-1.0, 1.0});

    const TruthTable lbf_tab = tabulate(Lbf{0.5, {0, 1}});
    CHECK(lbf_tab.values == std::vector<double>{-0.5, 0.5});

    const TruthTable andf = tabulate(Ltf{{1.0, 1.0}, 2.0});
    CHECK(andf.values == std::vector<double>{-1.0, -1.0, -1.0, 1.0});
}

TEST_CASE("tabulate honors the cap and rejects oracles") {
    const int old_cap = enumeration_cap();
    set_enumeration_cap(4);
    CHECK_THROWS_AS(tabulate(Ltf{{1, 1, 1, 1, 1}, 0.0}), CapError);
    set_enumeration_cap(old_cap);

    const auto oracle = FunctionSource::oracle(FunctionSource::ltf(Ltf{{1.0}, 0.0}), 7);
    CHECK_THROWS_AS(tabulate(oracle), ParamError);
}

TEST_CASE("tabulate round-trips against direct evaluation") {
    Xoshiro rng(derive_seed(13, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(10));
        FunctionSource src = (trial % 2 == 0)
            ? FunctionSource::ltf(random_ltf_gaussian(n, rng.next(), 0.3))
            : FunctionSource::lbf(testutil::random_lbf(n, rng.next(), 0.2, 6));
        const TruthTable t = tabulate(src);
        for (std::uint64_t idx = 0; idx < t.values.size(); ++idx) {
            std::vector<int> x(n);
            for (int i = 1; i <= n; ++i) x[i - 1] = coord_from_index(idx, n, i);
            CHECK(t.values[idx] == src.eval(x));
        }
    }
}

TEST_CASE("lbf_to_ltf examples") {
    const auto dict = lbf_to_ltf(Lbf{0.5, {0, 1}});
    CHECK_FALSE(dict.degenerate);
    CHECK(dict.ltf.weights == std::vector<double>{0.5});
    CHECK(dict.ltf.theta == 0.0);
    CHECK(tabulate(dict.ltf).values == std::vector<double>{-1.0, 1.0});

    const auto andf = lbf_to_ltf(Lbf{1.0, {-2, 1, 1}});
    CHECK_FALSE(andf.degenerate);
    CHECK(tabulate(andf.ltf).values == tabulate(Ltf{{1.0, 1.0}, 2.0}).values);

    const auto degen = lbf_to_ltf(Lbf{1.0, {0, 0}});
    CHECK(degen.degenerate);
    CHECK(tabulate(degen.ltf).values == std::vector<double>{1.0, 1.0});
}

TEST_CASE("LTF conversion at most doubles the distance") {
    Xoshiro rng(derive_seed(14, 0));
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const TruthTable f = testutil::random_boolean_table(n, rng.next());
        const Lbf g = testutil::random_lbf(n, rng.next(), 0.05 + 0.3 * rng.uniform(), 8);
        const TruthTable gt = tabulate(g);
        const TruthTable ft = tabulate(lbf_to_ltf(g).ltf);
        CHECK(dist_l1(f, ft) <= 2.0 * dist_l1(f, gt) + 1e-12);
    }
}
