#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "grover_phase/equivalence.hpp"
#include "grover_phase/operators.hpp"
#include "grover_phase/statevector_engine.hpp"
#include "grover_phase/subspace_engine.hpp"

namespace grover_phase::cli {
namespace {

constexpr int kFigureOnePoints = 200;
constexpr int kSurfaceIterations = 5;

double parse_real(std::string_view text) {
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

AlgorithmKind figure_kind(int index) {
    switch (index) {
    case 2:
        return AlgorithmKind::Long;
    case 3:
        return AlgorithmKind::LiDF;
    case 4:
        return AlgorithmKind::LiCM;
    case 5:
        return AlgorithmKind::LiPC;
    default:
        throw std::invalid_argument("figure index must be in 1..5");
    }
}

// Writes through a buffer so a failed open never leaves a partial file.
int emit(const std::string &payload, const std::string &path, std::ostream &out,
         std::ostream &err) {
    if (path == "-") {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return kExitUsage;
    }
    file << payload;
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

PhaseParams random_params(AlgorithmKind kind, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    switch (kind) {
    case AlgorithmKind::Original:
        return OriginalParams{};
    case AlgorithmKind::Long: {
        const double phi = angle(rng);
        if (std::bernoulli_distribution(0.5)(rng)) {
            return LongParams{phi, angle(rng)};
        }
        return LongParams{phi, std::nullopt};
    }
    case AlgorithmKind::LiDF:
        return LiDFParams{angle(rng)};
    case AlgorithmKind::LiCM: {
        const double g1 = angle(rng);
        const double g2 = angle(rng);
        const double e1 = angle(rng);
        const double e2 = angle(rng);
        return LiCMParams{g1, g2, e1, e2};
    }
    case AlgorithmKind::LiPC:
        return LiPCParams{angle(rng)};
    }
    return OriginalParams{};
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    std::string s(buf, ptr);
    return s == "-0" ? "0" : s;
}

double parse_angle(std::string_view text) {
    std::string s = trim(text);
    s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
    const auto pi_at = s.find("pi");
    if (pi_at == std::string::npos) {
        return parse_real(s);
    }
    const std::string head = s.substr(0, pi_at);
    const std::string tail = s.substr(pi_at + 2);
    double factor = 1.0;
    if (head == "-") {
        factor = -1.0;
    } else if (!head.empty() && head != "+") {
        factor = parse_real(head);
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw std::invalid_argument("malformed angle: '" + std::string(text) +
                                        "'");
        }
        divisor = parse_real(tail.substr(1));
        if (divisor == 0.0) {
            throw std::invalid_argument("angle divides by zero");
        }
    }
    return factor * kPi / divisor;
}

AxisSpec parse_axis(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos ||
        text.find(':', c2 + 1) != std::string_view::npos) {
        throw std::invalid_argument("axis must look like min:max:steps, got '" +
                                    std::string(text) + "'");
    }
    AxisSpec axis{parse_angle(text.substr(0, c1)),
                  parse_angle(text.substr(c1 + 1, c2 - c1 - 1)), 0};
    const double steps = parse_real(trim(text.substr(c2 + 1)));
    if (steps < 1 || steps != std::floor(steps) || steps > 1e7) {
        throw std::invalid_argument("axis steps must be a positive integer");
    }
    axis.steps = static_cast<int>(steps);
    return axis;
}

void write_sweep_csv(const SweepResult &result, std::string_view phase_header,
                     std::ostream &out) {
    out << "lambda," << phase_header << ",k,probability\n";
    for (const SweepRow &row : result.rows) {
        out << format_number(row.lambda_) << ',' << format_number(row.phase) << ','
            << row.k << ',' << format_number(row.probability) << '\n';
    }
}

void write_figure_csv(int index, std::ostream &out) {
    if (index == 1) {
        std::vector<double> lambdas(kFigureOnePoints);
        for (int i = 0; i < kFigureOnePoints; ++i) {
            lambdas[static_cast<std::size_t>(i)] =
                static_cast<double>(i + 1) / kFigureOnePoints;
        }
        out << "lambda,k,probability\n";
        for (const CurvePoint &p : optimal_k_curve(lambdas)) {
            out << format_number(p.lambda_) << ',' << p.k << ','
                << format_number(p.probability) << '\n';
        }
        return;
    }
    SweepGrid grid; // 101 x 101 over lambda in [0.01, 1], phi in [0, 2 pi]
    grid.kind = figure_kind(index);
    grid.k = kSurfaceIterations;
    write_sweep_csv(sweep(grid, /*matched_from_long=*/true), "phi", out);
}

int check_equivalence(const EquivalenceOptions &options, std::ostream &out) {
    const SubspaceGeometry g = geometry_from_lambda(options.lambda);
    const PhaseParams source = LongParams{options.phi, std::nullopt};
    const double p_source =
        success_probability(run(iteration_matrix(source, g), options.k));

    bool all_hold = true;
    for (AlgorithmKind kind :
         {AlgorithmKind::LiDF, AlgorithmKind::LiCM, AlgorithmKind::LiPC}) {
        PhaseParams target = transform_phases(source, kind);
        if (auto *lidf = std::get_if<LiDFParams>(&target)) {
            lidf->tau += options.perturb;
        }
        const EquivalenceReport r =
            compare_iterations(source, target, g, options.tol);
        const double p_target =
            success_probability(run(iteration_matrix(target, g), options.k));
        const double p_dev = std::abs(p_source - p_target);
        const bool hold = r.holds && p_dev <= options.tol;
        all_hold = all_hold && hold;

        out << describe(source) << " vs " << describe(target)
            << ": predicted=" << format_number(r.predicted_phase.angle())
            << " measured="
            << (r.measured_phase ? format_number(r.measured_phase->angle())
                                 : std::string("none"))
            << " max_dev=" << format_number(r.max_entry_deviation) << " P_k="
            << format_number(p_source) << '/' << format_number(p_target) << ' '
            << (hold ? "HOLD" : "FAIL") << '\n';
    }
    return all_hold ? kExitOk : kExitVerification;
}

CrosscheckSummary crosscheck(const CrosscheckOptions &options) {
    if (options.qubits < 1 || options.qubits > 20) {
        throw std::invalid_argument("crosscheck: n must be in [1, 20]");
    }
    if (options.samples < 0 || options.max_k < 0) {
        throw std::invalid_argument("crosscheck: samples and k must be >= 0");
    }
    std::mt19937_64 rng(options.seed);
    const std::size_t n_items = std::size_t{1} << options.qubits;
    std::vector<std::size_t> indices(n_items);
    std::iota(indices.begin(), indices.end(), std::size_t{0});

    std::uniform_int_distribution<std::size_t> count_dist(1, n_items);
    std::uniform_int_distribution<std::size_t> kind_dist(0, std::size(kAllKinds) - 1);
    std::uniform_int_distribution<int> k_dist(0, options.max_k);

    CrosscheckSummary summary;
    for (int i = 0; i < options.samples; ++i) {
        const std::size_t m = count_dist(rng);
        std::shuffle(indices.begin(), indices.end(), rng);
        const SearchSpace space = make_search_space(
            options.qubits, {indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(m)});
        const PhaseParams params = random_params(kAllKinds[kind_dist(rng)], rng);
        const int k = k_dist(rng);

        const SubspaceState reduced =
            run(iteration_matrix(params, geometry_of(space)), k);
        const StateVector full = run_full(space, params, k);
        const SubspaceProjection proj = project_to_subspace(full);

        summary.max_probability_deviation =
            std::max(summary.max_probability_deviation,
                     std::abs(target_probability(full) - success_probability(reduced)));
        summary.max_residual = std::max(summary.max_residual, proj.residual);
        summary.max_amplitude_deviation = std::max(
            {summary.max_amplitude_deviation, std::abs(proj.state.a - reduced.a),
             std::abs(proj.state.b - reduced.b)});
        ++summary.cases;
    }
    return summary;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Grover-type phase variants: figure data, equivalence checks "
                 "and engine cross-validation",
                 "grover-phase"};
    app.require_subcommand(1);

    int figure_index = 0;
    std::string figure_out;
    auto *figure = app.add_subcommand("figure", "Write the CSV behind figure 1..5");
    figure->add_option("index", figure_index, "Figure number")
        ->required()
        ->check(CLI::Range(1, 5));
    figure->add_option("--out", figure_out, "Output path ('-' for stdout)")
        ->required();

    std::string sweep_kind, sweep_lambda, sweep_phase, sweep_out;
    int sweep_k = 0;
    bool sweep_matched = false;
    auto *sweep_cmd =
        app.add_subcommand("sweep", "Probability over a (lambda, phase) grid");
    sweep_cmd->add_option("--kind", sweep_kind,
                          "original | long | lidf | licm | lipc")
        ->required();
    sweep_cmd->add_option("--k", sweep_k, "Iteration count")->required();
    sweep_cmd->add_option("--lambda", sweep_lambda, "min:max:steps")->required();
    sweep_cmd->add_option("--phase", sweep_phase, "min:max:steps")->required();
    sweep_cmd->add_option("--out", sweep_out, "Output path ('-' for stdout)")
        ->required();
    sweep_cmd->add_flag("--matched", sweep_matched,
                        "Read the phase axis as Long's phi and map it through "
                        "the phase-transform condition");

    std::string eq_phi, eq_perturb = "0";
    EquivalenceOptions eq;
    auto *equiv = app.add_subcommand(
        "check-equivalence", "Check the variants against Long up to global phase");
    equiv->add_option("--phi", eq_phi, "Long's phase (radians, or e.g. pi/2)")
        ->required();
    equiv->add_option("--lambda", eq.lambda, "Target proportion in (0, 1]")
        ->required();
    equiv->add_option("--k", eq.k, "Iterations for the probability comparison")
        ->required();
    equiv->add_option("--tol", eq.tol, "Tolerance")->capture_default_str();
    equiv->add_option("--perturb", eq_perturb,
                      "Offset added to the mapped LiDF tau (breaks the condition)");

    CrosscheckOptions cc;
    auto *cross = app.add_subcommand(
        "crosscheck", "Compare the subspace engine with full statevectors");
    cross->add_option("--n", cc.qubits, "Qubits (1..20)")->required();
    cross->add_option("--seed", cc.seed, "Generator seed")->required();
    cross->add_option("--samples", cc.samples, "Random cases")->required();
    cross->add_option("--tol", cc.tol, "Tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*figure) {
            std::ostringstream csv;
            write_figure_csv(figure_index, csv);
            return emit(csv.str(), figure_out, out, err);
        }
        if (*sweep_cmd) {
            const auto kind = parse_kind(sweep_kind);
            if (!kind) {
                err << "error: unknown kind '" << sweep_kind << "'\n";
                return kExitUsage;
            }
            const AxisSpec lam = parse_axis(sweep_lambda);
            const AxisSpec ph = parse_axis(sweep_phase);
            const SweepGrid grid{lam.lo, lam.hi, lam.steps, ph.lo, ph.hi,
                                 ph.steps, sweep_k, *kind};
            std::ostringstream csv;
            write_sweep_csv(sweep(grid, sweep_matched), "phase", csv);
            return emit(csv.str(), sweep_out, out, err);
        }
        if (*equiv) {
            eq.phi = parse_angle(eq_phi);
            eq.perturb = parse_angle(eq_perturb);
            if (!(eq.tol > 0.0) || eq.k < 0) {
                err << "error: --tol must be positive and --k non-negative\n";
                return kExitUsage;
            }
            return check_equivalence(eq, out);
        }
        if (*cross) {
            if (!(cc.tol > 0.0)) {
                err << "error: --tol must be positive\n";
                return kExitUsage;
            }
            const CrosscheckSummary s = crosscheck(cc);
            out << "rng=" << kCrosscheckRng << " seed=" << cc.seed
                << " n=" << cc.qubits << " cases=" << s.cases << '\n';
            if (s.cases == 0) {
                out << "0 cases: nothing to compare\n";
                return kExitOk;
            }
            out << "max_probability_deviation="
                << format_number(s.max_probability_deviation)
                << " max_residual=" << format_number(s.max_residual)
                << " max_amplitude_deviation="
                << format_number(s.max_amplitude_deviation) << '\n';
            const bool ok = s.passed(cc.tol);
            out << (ok ? "PASS" : "FAIL") << " (tol=" << format_number(cc.tol)
                << ")\n";
            return ok ? kExitOk : kExitVerification;
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace grover_phase::cli
