#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "grover_phase/operators.hpp"
#include "grover_phase/statevector_engine.hpp"
#include "grover_phase/subspace_engine.hpp"
#include "test_support.hpp"

namespace grover_phase {
namespace {

TEST(UniformState, Amplitudes) {
    for (int n : {1, 2, 3}) {
        const auto v = uniform_state(make_search_space(n, {0}));
        const double expected = std::pow(2.0, -n / 2.0);
        for (const Complex &z : v.amplitudes()) {
            EXPECT_NEAR(z.real(), expected, 1e-15);
            EXPECT_EQ(z.imag(), 0.0);
        }
    }
}

TEST(UniformState, RejectsTooManyQubits) {
    EXPECT_THROW(uniform_state(make_search_space(kMaxStatevectorQubits + 1, {0})),
                 std::invalid_argument);
}

TEST(StateVector, LengthMustMatch) {
    EXPECT_THROW(StateVector(make_search_space(2, {0}), std::vector<Complex>(3)),
                 std::invalid_argument);
}

TEST(ApplyOracle, OriginalNegatesTargets) {
    const auto space = make_search_space(2, {3});
    const auto v = apply_oracle(uniform_state(space), OriginalParams{});
    EXPECT_EQ(v.amplitudes()[3], Complex(-0.5));
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(v.amplitudes()[i], Complex(0.5));
    }
}

TEST(ApplyOracle, LongAtPiActsLikeOriginal) {
    std::mt19937_64 rng(31);
    const auto space = make_search_space(4, {1, 2, 11});
    std::vector<Complex> amps(space.size());
    for (auto &z : amps) {
        z = {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
    }
    const StateVector v(space, amps);
    const auto a = apply_oracle(v, LongParams{kPi, std::nullopt});
    const auto b = apply_oracle(v, OriginalParams{});
    for (std::size_t i = 0; i < amps.size(); ++i) {
        EXPECT_LE(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 1e-15);
    }
}

TEST(ApplyOracle, LiPCAtZeroIsIdentity) {
    const auto v = uniform_state(make_search_space(3, {2}));
    EXPECT_EQ(apply_oracle(v, LiPCParams{0.0}).amplitudes(), v.amplitudes());
}

TEST(ApplyOracle, LiCMScalesBothClasses) {
    const auto space = make_search_space(2, {0});
    const auto v = apply_oracle(uniform_state(space), LiCMParams{0, 0, 0.3, 1.2});
    EXPECT_LE(std::abs(v.amplitudes()[0] - 0.5 * -unit_phasor(0.3)), 1e-15);
    EXPECT_LE(std::abs(v.amplitudes()[1] - 0.5 * -unit_phasor(1.2)), 1e-15);
}

TEST(ApplyDiffusion, OriginalFixesUniformState) {
    const auto s = uniform_state(make_search_space(3, {0}));
    const auto out = apply_diffusion(s, OriginalParams{});
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_LE(std::abs(out.amplitudes()[i] - s.amplitudes()[i]), 1e-15);
    }
}

TEST(ApplyDiffusion, OriginalNegatesOrthogonalState) {
    const auto space = make_search_space(2, {0});
    const StateVector v(space, {0.5, -0.5, Complex{0, 0.5}, Complex{0, -0.5}});
    const auto out = apply_diffusion(v, OriginalParams{});
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LE(std::abs(out.amplitudes()[i] + v.amplitudes()[i]), 1e-15);
    }
}

TEST(ApplyDiffusion, LiCMEqualGammasIsPhase) {
    const auto space = make_search_space(2, {0});
    const StateVector v(space, {0.1, Complex{0.7, 0.1}, -0.5, Complex{0, 0.5}});
    const auto out = apply_diffusion(v, LiCMParams{0.6, 0.6, 0, 0});
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_LE(std::abs(out.amplitudes()[i] - unit_phasor(0.6) * v.amplitudes()[i]),
                  1e-15);
    }
}

TEST(RunFull, QuarterProportionFindsTargetInOneStep) {
    const auto v = run_full(make_search_space(2, {0}), OriginalParams{}, 1);
    EXPECT_NEAR(target_probability(v), 1.0, 1e-12);
}

TEST(RunFull, ZeroStepsIsUniform) {
    const auto space = make_search_space(3, {4, 6});
    EXPECT_EQ(run_full(space, LiPCParams{0.4}, 0).amplitudes(),
              uniform_state(space).amplitudes());
}

TEST(RunFull, AllTargetsAlwaysSucceeds) {
    const auto space = make_search_space(1, {0, 1});
    for (int k : {0, 1, 2, 9}) {
        EXPECT_NEAR(target_probability(run_full(space, OriginalParams{}, k)), 1.0, 1e-12);
    }
}

// Expected probabilities from dense N x N matrices built from the operator
// definitions and raised to the k-th power (numpy, complex128).
struct DenseCase {
    int qubits;
    std::vector<std::size_t> targets;
    PhaseParams params;
    int k;
    double probability;
};

TEST(RunFull, MatchesDenseMatrixReference) {
    const std::vector<DenseCase> cases = {
        {4, {5}, LongParams{1.1, 0.4}, 4, 0.22310455654323363},
        {3, {1, 4, 6}, LiCMParams{1.3, 0.2, 0.9, -0.5}, 3, 0.4662874900581164},
        {5, {0, 7, 9, 30}, LiPCParams{0.8}, 5, 0.9976375936717101},
        {2, {2}, LiDFParams{-0.6}, 2, 0.7481070227503647},
    };
    for (const auto &c : cases) {
        const auto space = make_search_space(c.qubits, c.targets);
        EXPECT_NEAR(target_probability(run_full(space, c.params, c.k)), c.probability,
                    1e-12)
            << describe(c.params);
        EXPECT_NEAR(success_probability(
                        run(iteration_matrix(c.params, geometry_of(space)), c.k)),
                    c.probability, 1e-12)
            << describe(c.params);
    }
}

TEST(TargetProbability, UniformStates) {
    EXPECT_NEAR(target_probability(uniform_state(make_search_space(2, {1}))), 0.25,
                1e-15);
    EXPECT_NEAR(target_probability(uniform_state(make_search_space(3, {0, 7}))), 0.25,
                1e-15);
}

TEST(ProjectToSubspace, UniformStateDecomposes) {
    const auto space = make_search_space(4, {3, 8, 9});
    const auto g = geometry_of(space);
    const auto p = project_to_subspace(uniform_state(space));
    EXPECT_NEAR(p.state.a.real(), std::sin(g.theta), 1e-15);
    EXPECT_NEAR(p.state.b.real(), std::cos(g.theta), 1e-15);
    EXPECT_LT(p.residual, 1e-15);
}

TEST(ProjectToSubspace, AlphaState) {
    const auto space = make_search_space(2, {1, 2});
    const double h = 1.0 / std::sqrt(2.0);
    const auto p = project_to_subspace(StateVector(space, {0.0, h, h, 0.0}));
    EXPECT_NEAR(p.state.a.real(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(p.state.b), 0.0, 1e-15);
    EXPECT_LT(p.residual, 1e-15);
}

TEST(ProjectToSubspace, DetectsOutOfSubspaceComponent) {
    const auto space = make_search_space(2, {0});
    // (0, 1, -1, 0)/sqrt(2) is orthogonal to both |alpha> and |beta>.
    const double h = 1.0 / std::sqrt(2.0);
    const auto p = project_to_subspace(StateVector(space, {0.0, h, -h, 0.0}));
    EXPECT_NEAR(p.residual, 1.0, 1e-15);
}

TEST(StatevectorProperties, AgreesWithSubspaceEngine) {
    std::mt19937_64 rng(32);
    for (int n = 1; n <= 10; ++n) {
        const std::size_t size = std::size_t{1} << n;
        std::vector<std::size_t> pool(size);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (int i = 0; i < 50; ++i) {
            const auto m = std::uniform_int_distribution<std::size_t>(1, size)(rng);
            std::shuffle(pool.begin(), pool.end(), rng);
            const auto space = make_search_space(
                n, {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m)});
            const auto params = testing::random_params(testing::random_kind(rng), rng);
            const int k = std::uniform_int_distribution<int>(0, 25)(rng);

            const auto full = run_full(space, params, k);
            const auto reduced = run(iteration_matrix(params, geometry_of(space)), k);
            const auto proj = project_to_subspace(full);

            ASSERT_LT(std::abs(target_probability(full) - success_probability(reduced)),
                      1e-10)
                << describe(params) << " n=" << n << " M=" << m << " k=" << k;
            ASSERT_LT(proj.residual, 1e-10);
            // Same operators, so amplitudes agree with no extra phase.
            const Mat2C lhs = Mat2C::diagonal(proj.state.a, proj.state.b);
            const Mat2C rhs = Mat2C::diagonal(reduced.a, reduced.b);
            ASSERT_LE(max_entry_deviation(lhs, rhs), 1e-10);
        }
    }
}

TEST(StatevectorProperties, NormPreservedOverHundredSteps) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 30; ++i) {
        const auto space = make_search_space(6, {1, 17, 40});
        const auto params = testing::random_params(testing::random_kind(rng), rng);
        EXPECT_NEAR(run_full(space, params, 100).norm(), 1.0, 1e-9);
    }
}

} // namespace
} // namespace grover_phase
