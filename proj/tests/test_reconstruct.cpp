#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chowlab/instances.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/reconstruct.hpp"
#include "test_util.hpp"

using namespace chowlab;

namespace {

// independent enumeration oracle for E(t) = E[(f-g)(f-2g'+g)]
double potential_oracle(const TruthTable& f, const Lbf& g) {
    double acc = 0.0;
    for (std::uint64_t idx = 0; idx < f.values.size(); ++idx) {
        std::vector<int> x(f.n);
        for (int i = 1; i <= f.n; ++i) x[i - 1] = coord_from_index(idx, f.n, i);
        std::int64_t s = g.v[0];
        for (int i = 0; i < f.n; ++i) s += g.v[i + 1] * x[i];
        const double gp = g.kappa * static_cast<double>(s);
        const double gt = project_p1(gp);
        acc += (f.values[idx] - gt) * (f.values[idx] - 2.0 * gp + gt);
    }
    return acc / static_cast<double>(f.values.size());
}

}  // namespace

TEST_CASE("round_to_grid examples") {
    const GridRound on_grid = round_to_grid(1.0, 0.0, 0.5);
    CHECK(on_grid.m == 2);
    CHECK(on_grid.value == 0.0);

    const double u = 0.1 / (2.0 * std::sqrt(2.0));
    const GridRound fine = round_to_grid(1.0, 0.0, u);
    CHECK(fine.m == 28);
    CHECK(fine.value == doctest::Approx(0.0100505063).epsilon(1e-8));

    // exact half: round toward the larger m
    const GridRound tie = round_to_grid(0.0, 0.25, 0.5);
    CHECK(tie.m == 0);
    CHECK(tie.value == 0.0);
    const GridRound tie_up = round_to_grid(0.25, 0.0, 0.5);
    CHECK(tie_up.m == 1);

    CHECK_THROWS_AS(round_to_grid(0.0, 0.0, 0.0), ParamError);
}

TEST_CASE("iteration cap formula") {
    CHECK(reconstruct_iteration_cap(0.1) == 50);
    CHECK(reconstruct_iteration_cap(0.2) == 13);
}

TEST_CASE("all-zero alpha stops immediately") {
    ChowVector alpha;
    alpha.values.assign(4, 0.0);
    ReconstructParams params;
    params.eps = 0.05;
    const ReconstructResult res = chow_reconstruct(alpha, params);
    CHECK(res.converged());
    CHECK(res.trace.iterations == 0);
    CHECK(res.trace.records.size() == 1);
    CHECK(res.trace.records[0].rho == 0.0);
    CHECK(res.lbf.v == std::vector<std::int64_t>{0, 0, 0, 0});
}

TEST_CASE("dictator trace is reproduced step by step") {
    ChowVector alpha;
    alpha.values = {0.0, 1.0};
    ReconstructParams params;
    params.eps = 0.1;
    const ReconstructResult res = chow_reconstruct(alpha, params);

    REQUIRE(res.converged());
    CHECK(res.trace.iterations == 2);
    REQUIRE(res.trace.records.size() == 3);
    CHECK(res.trace.records[0].rho == doctest::Approx(0.98994949).epsilon(1e-8));
    CHECK(res.trace.records[1].rho == doctest::Approx(0.49497475).epsilon(1e-8));
    CHECK(res.trace.records[2].rho == doctest::Approx(0.24748737).epsilon(1e-8));
    CHECK(res.trace.records[2].rho <= 0.4);

    CHECK(res.lbf.v == std::vector<std::int64_t>{0, 42});
    CHECK(res.lbf.kappa == 0.1 / (4.0 * std::sqrt(2.0)));
    CHECK(res.lbf.kappa * 42.0 == doctest::Approx(0.74246212).epsilon(1e-8));

    const ChowVector final_chow = chow_exact(FunctionSource::lbf(res.lbf));
    CHECK(chow_distance(alpha, final_chow) == doctest::Approx(0.25753788).epsilon(1e-7));
    CHECK(chow_distance(alpha, final_chow) <= 0.6);
}

TEST_CASE("potential examples") {
    const TruthTable maj = tabulate(majority(3));

    Lbf zero{1.0, {0, 0, 0, 0}};
    CHECK(potential(maj, zero) == 1.0);

    // g' = 0.5 x1 (so g = g'); frozen from the enumeration oracle
    Lbf half_dict{0.5, {0, 1, 0, 0}};
    CHECK(potential_oracle(maj, half_dict) == 0.75);
    CHECK(potential(maj, half_dict) == 0.75);

    // g == f makes both factors vanish
    Lbf maj_as_lbf{1.0, {0, 1, 1, 1}};
    CHECK(potential(maj, maj_as_lbf) == 0.0);

    Lbf dict_as_lbf{1.0, {0, 1}};
    const TruthTable dict = tabulate(Ltf{{1.0}, 0.0});
    CHECK(potential(dict, dict_as_lbf) == 0.0);

    Xoshiro rng(derive_seed(31, 0));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const TruthTable f = testutil::random_boolean_table(n, rng.next());
        Lbf z{1.0, std::vector<std::int64_t>(n + 1, 0)};
        CHECK(potential(f, z) == 1.0);
        const Lbf g = testutil::random_lbf(n, rng.next(), 0.1, 6);
        CHECK(potential(f, g) == doctest::Approx(potential_oracle(f, g)).epsilon(1e-12));
    }
}

TEST_CASE("exact mode invariants on random LTFs") {
    Xoshiro rng(derive_seed(32, 0));
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(9));  // 4..12
        const double eps = trial % 2 == 0 ? 0.1 : 0.2;
        const Ltf f = random_ltf_gaussian(n, rng.next());
        const TruthTable ft = tabulate(f);
        const ChowVector alpha = chow_exact(ft);

        ReconstructParams params;
        params.eps = eps;
        const ReconstructResult res = chow_reconstruct(alpha, params, &ft);

        REQUIRE(res.converged());
        const long long cap = reconstruct_iteration_cap(eps);
        CHECK(res.trace.iterations <= cap);
        CHECK(res.trace.records.back().rho <= 4.0 * eps);
        CHECK(res.lbf.kappa == eps / (4.0 * std::sqrt(static_cast<double>(n + 1))));

        // potential law: E(0) = 1, E(t) >= 0, and a guaranteed decrease at
        // every non-final iteration
        REQUIRE(res.trace.records.front().potential.has_value());
        CHECK(*res.trace.records.front().potential == 1.0);
        for (const auto& rec : res.trace.records) CHECK(*rec.potential >= -1e-12);
        for (std::size_t t = 0; t + 1 < res.trace.records.size(); ++t) {
            const double drop =
                *res.trace.records[t + 1].potential - *res.trace.records[t].potential;
            CHECK(drop <= -2.0 * eps * eps + 1e-9);
        }

        // weight structure
        double vnorm = 0.0;
        for (std::int64_t vi : res.lbf.v)
            vnorm += static_cast<double>(vi) * static_cast<double>(vi);
        vnorm = std::sqrt(vnorm);
        CHECK(vnorm <= 8.0 * std::sqrt(static_cast<double>(n + 1)) / (eps * eps * eps));

        // the final guarantee, all slack accounted
        const double dchow = chow_distance(alpha, chow_exact(FunctionSource::lbf(res.lbf)));
        CHECK(dchow <= 6.0 * eps);
    }
}

TEST_CASE("reconstruction is deterministic") {
    const Ltf f = random_ltf_gaussian(9, 77);
    const ChowVector alpha = chow_exact(FunctionSource::ltf(f));
    ReconstructParams params;
    params.eps = 0.1;
    params.seed = 42;
    const auto a = chow_reconstruct(alpha, params);
    const auto b = chow_reconstruct(alpha, params);
    CHECK(trace_to_json(a.trace).dump() == trace_to_json(b.trace).dump());
    CHECK(a.lbf.v == b.lbf.v);
}

TEST_CASE("unreachable alpha hits the iteration cap with a usable trace") {
    ChowVector alpha;
    alpha.values = {5.0, 5.0};
    ReconstructParams params;
    params.eps = 0.3;
    const ReconstructResult res = chow_reconstruct(alpha, params);
    CHECK_FALSE(res.converged());
    CHECK(res.trace.stop_reason == StopReason::cap);
    CHECK(res.trace.iterations == reconstruct_iteration_cap(0.3));
    CHECK(res.trace.records.size() ==
          static_cast<std::size_t>(reconstruct_iteration_cap(0.3)) + 1);
    for (const auto& rec : res.trace.records) CHECK(rec.rho > 4.0 * 0.3);
}

TEST_CASE("estimated mode reaches the same guarantee") {
    const Ltf f = majority(3);
    const TruthTable ft = tabulate(f);
    const ChowVector alpha = chow_exact(ft);

    ReconstructParams params;
    params.eps = 0.2;
    params.delta = 0.1;
    params.mode = ChowMode::estimated;
    params.seed = 2024;
    const ReconstructResult res = chow_reconstruct(alpha, params);
    REQUIRE(res.converged());
    const double dchow = chow_distance(alpha, chow_exact(FunctionSource::lbf(res.lbf)));
    CHECK(dchow <= 6.0 * params.eps);

    const ReconstructResult again = chow_reconstruct(alpha, params);
    CHECK(trace_to_json(res.trace).dump() == trace_to_json(again.trace).dump());
}

TEST_CASE("parameter validation") {
    ChowVector alpha;
    alpha.values = {0.0, 1.0};
    ReconstructParams params;
    params.eps = 0.0;
    CHECK_THROWS_AS(chow_reconstruct(alpha, params), ParamError);
    params.eps = 0.1;
    params.delta = 1.0;
    CHECK_THROWS_AS(chow_reconstruct(alpha, params), ParamError);
}
