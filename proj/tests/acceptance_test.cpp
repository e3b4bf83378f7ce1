// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"
#include "grover_phase/grover_phase.hpp"

namespace {

using namespace grover_phase;

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    const char *id;
    const char *title;
    double budget_seconds;
    std::function<Outcome()> body;
};

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// 1. Figure 1 spot values.
Outcome optimal_k_spot_values() {
    const double half = closed_form_probability(0.5, optimal_iterations(0.5));
    const double p147 = closed_form_probability(0.147, optimal_iterations(0.147));
    const bool ok = std::abs(half - 0.5) <= 1e-12 && p147 >= 0.845 && p147 <= 0.858;
    return {ok, fmt("P(0.5)=%.15g", half) + fmt(" P(0.147)=%.6f", p147) +
                    " (window [0.845, 0.858])"};
}

// 2. Randomized global-phase equivalence of the four variants.
Outcome randomized_equivalence() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> proportion(0.0, 1.0);
    double worst_dev = 0.0, worst_phase = 0.0;
    bool aligned = true;
    for (int i = 0; i < 1000; ++i) {
        const double phi = angle(rng);
        double lambda = proportion(rng);
        if (lambda == 0.0) {
            lambda = 1.0;
        }
        const double gamma2 = angle(rng);
        const double eta2 = angle(rng);
        const auto g = geometry_from_lambda(lambda);

        const LongParams long_p{phi, std::nullopt};
        const LiDFParams lidf{(phi - kPi) / 2.0};
        const LiCMParams licm{phi + gamma2, gamma2, phi + eta2, eta2};
        const LiPCParams lipc{-phi};

        const Mat2C reference = iteration_matrix(long_p, g).m;
        const std::pair<PhaseParams, double> others[] = {
            {lidf, 0.0}, {licm, -(gamma2 + eta2)}, {lipc, kPi - lipc.beta}};
        for (const auto &[params, predicted] : others) {
            const Mat2C m = iteration_matrix(params, g).m;
            const auto chi = global_phase_align(reference, m, 1e-10);
            if (!chi) {
                aligned = false;
                continue;
            }
            worst_dev = std::max(worst_dev,
                                 max_entry_deviation(reference, chi->factor() * m));
            worst_phase = std::max(worst_phase, angle_distance(chi->angle(), predicted));
            // Library prediction must agree with the hand-written one.
            worst_phase = std::max(
                worst_phase,
                angle_distance(predicted_global_phase(long_p, params).angle(), predicted));
        }
    }
    const bool ok = aligned && worst_dev < 1e-10 && worst_phase <= 1e-10;
    return {ok, std::string(aligned ? "all aligned" : "ALIGNMENT FAILED") +
                    fmt(", max entry dev %.3g", worst_dev) +
                    fmt(", max phase error %.3g", worst_phase)};
}

// 3. The 25/27 single-iteration floor.
Outcome single_iteration_floor() {
    const double bound = 25.0 / 27.0;
    const double analytic = probability_floor(1.0 / 3.0);
    const double at_third = single_iteration_probability(1.0 / 3.0);
    const double at_five_sixths = single_iteration_probability(5.0 / 6.0);
    double scan_min = 1.0;
    const int points = 100000;
    for (int i = 0; i < points; ++i) {
        scan_min = std::min(scan_min, single_iteration_probability(
                                          1.0 / 3.0 + (2.0 / 3.0) * i / (points - 1)));
    }
    const bool ok = std::abs(analytic - bound) <= 1e-12 &&
                    std::abs(at_third - bound) <= 1e-12 &&
                    std::abs(at_five_sixths - bound) <= 1e-12 &&
                    scan_min >= bound - 1e-9;
    return {ok, fmt("floor=%.15g", analytic) + fmt(" (25/27=%.15g)", bound) +
                    fmt(", grid min %.15g", scan_min)};
}

// 4. One step at matched quarter phases reproduces 4m^3 - 8m^2 + 5m.
Outcome single_iteration_all_variants() {
    const PhaseParams variants[] = {
        LongParams{kPi / 2, std::nullopt},
        LiDFParams{-kPi / 4},
        LiCMParams{kPi / 2, 0.0, kPi / 2, 0.0},
        LiCMParams{kPi / 2 + 0.8, 0.8, kPi / 2 - 1.3, -1.3},
        LiPCParams{-kPi / 2},
    };
    double worst = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double m = i / 1000.0;
        const double cubic = 4 * m * m * m - 8 * m * m + 5 * m;
        const auto g = geometry_from_lambda(m);
        for (const auto &params : variants) {
            worst = std::max(worst, std::abs(success_probability(
                                                 run(iteration_matrix(params, g), 1)) -
                                             cubic));
        }
    }
    return {worst <= 1e-10, fmt("max |P - cubic| = %.3g", worst)};
}

// 5. Matched 101 x 101 surfaces at k = 5 coincide.
Outcome matched_surfaces() {
    SweepGrid grid; // defaults: 101 x 101, lambda in [0.01, 1], phi in [0, 2 pi]
    grid.k = 5;
    std::vector<SweepResult> surfaces;
    for (AlgorithmKind kind : kVariantKinds) {
        grid.kind = kind;
        surfaces.push_back(sweep(grid, true));
    }
    double worst = 0.0;
    bool shape_ok = true;
    for (std::size_t a = 0; a < surfaces.size(); ++a) {
        shape_ok = shape_ok && surfaces[a].rows.size() == 101u * 101u;
        for (std::size_t b = a + 1; b < surfaces.size(); ++b) {
            for (std::size_t i = 0; i < surfaces[a].rows.size(); ++i) {
                worst = std::max(worst, std::abs(surfaces[a].rows[i].probability -
                                                 surfaces[b].rows[i].probability));
            }
        }
    }
    return {shape_ok && worst < 1e-10, fmt("max pairwise deviation %.3g", worst)};
}

// 6. Subspace engine vs full statevector.
Outcome engine_cross_validation() {
    double worst_p = 0.0, worst_r = 0.0;
    int cases = 0;
    for (int n = 1; n <= 10; ++n) {
        const auto s = cli::crosscheck({n, static_cast<std::uint64_t>(1000 + n), 100,
                                        1e-10, 25});
        worst_p = std::max(worst_p, s.max_probability_deviation);
        worst_r = std::max(worst_r, s.max_residual);
        cases += s.cases;
    }
    const bool ok = cases == 1000 && worst_p < 1e-10 && worst_r < 1e-10;
    return {ok, std::to_string(cases) + " cases" + fmt(", max |dP| %.3g", worst_p) +
                    fmt(", max residual %.3g", worst_r)};
}

// 7. Every variant contains the original algorithm.
Outcome reduction_suite() {
    double exact = 0.0, phased = 0.0;
    bool aligned = true;
    for (int i = 1; i <= 200; ++i) {
        const auto g = geometry_from_lambda(i / 200.0);
        const Mat2C original = iteration_matrix(OriginalParams{}, g).m;
        exact = std::max(exact, max_entry_deviation(
                                    iteration_matrix(LongParams{kPi, std::nullopt}, g).m,
                                    original));
        exact = std::max(exact,
                         max_entry_deviation(iteration_matrix(LiDFParams{0.0}, g).m, original));
        for (const PhaseParams &p :
             {PhaseParams{LiCMParams{kPi, 0.0, kPi, 0.0}},
              PhaseParams{LiCMParams{kPi + 0.4, 0.4, kPi - 0.9, -0.9}},
              PhaseParams{LiPCParams{-kPi}}}) {
            const Mat2C m = iteration_matrix(p, g).m;
            const auto chi = global_phase_align(original, m, 1e-10);
            if (!chi) {
                aligned = false;
                continue;
            }
            phased = std::max(phased, max_entry_deviation(original, chi->factor() * m));
        }
    }
    const bool ok = exact <= 1e-12 && aligned && phased <= 1e-10;
    return {ok, fmt("exact dev %.3g", exact) + fmt(", phased dev %.3g", phased)};
}

// 8. Unitarity of every iteration matrix and norm over 1000 steps.
Outcome unitarity_and_norm() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> proportion(1e-6, 1.0);
    int non_unitary = 0;
    double worst_norm = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const auto g = geometry_from_lambda(proportion(rng));
        const PhaseParams all[] = {
            OriginalParams{},
            LongParams{angle(rng), std::nullopt},
            LongParams{angle(rng), angle(rng)},
            LiDFParams{angle(rng)},
            LiCMParams{angle(rng), angle(rng), angle(rng), angle(rng)},
            LiPCParams{angle(rng)},
        };
        for (const auto &p : all) {
            const auto it = iteration_matrix(p, g);
            non_unitary += is_unitary(it.m, 1e-10) ? 0 : 1;
            if (i < 100) {
                worst_norm = std::max(worst_norm, std::abs(run(it, 1000).norm() - 1.0));
            }
        }
    }
    const bool ok = non_unitary == 0 && worst_norm <= 1e-9;
    return {ok, std::to_string(non_unitary) + " non-unitary of 12000" +
                    fmt(", max |norm-1| after 1000 steps %.3g", worst_norm)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "optimal-k spot values", 0.1, optimal_k_spot_values},
        {"AC2", "randomized global-phase equivalence", 1.0, randomized_equivalence},
        {"AC3", "25/27 single-iteration floor", 1.0, single_iteration_floor},
        {"AC4", "single iteration, all variants", 1.0, single_iteration_all_variants},
        {"AC5", "matched k=5 surfaces identical", 5.0, matched_surfaces},
        {"AC6", "engine cross-validation", 30.0, engine_cross_validation},
        {"AC7", "reduction to the original algorithm", 0.1, reduction_suite},
        {"AC8", "unitarity and normalization", 1.0, unitarity_and_norm},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, "exception"};
        try {
            outcome = c.body();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds <= c.budget_seconds;
        const bool pass = outcome.pass && in_budget;
        failures += pass ? 0 : 1;
        std::printf("[%s] %s %s: %s (%.3fs, budget %.1fs%s)\n", pass ? "PASS" : "FAIL",
                    c.id, c.title, outcome.detail.c_str(), seconds, c.budget_seconds,
                    in_budget ? "" : ", OVER BUDGET");
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
