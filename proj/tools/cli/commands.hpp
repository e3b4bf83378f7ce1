#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "grover_phase/analysis.hpp"

namespace grover_phase::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,       ///< bad arguments or I/O failure
    kExitVerification = 2 ///< a numerical check did not hold
};

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double value);

/// Parses a real number or a multiple of pi: "0.7", "-pi/4", "3pi/2", "2*pi".
/// Throws std::invalid_argument on malformed input.
double parse_angle(std::string_view text);

struct AxisSpec {
    double lo;
    double hi;
    int steps;
};

/// "min:max:steps", with min/max accepted in parse_angle syntax.
AxisSpec parse_axis(std::string_view text);

/// Writes the CSV for figure 1..5. Throws std::invalid_argument otherwise.
void write_figure_csv(int index, std::ostream &out);

/// Rows of a sweep; `phase_header` names the second column.
void write_sweep_csv(const SweepResult &result, std::string_view phase_header,
                     std::ostream &out);

struct EquivalenceOptions {
    double phi = kPi / 2.0;
    double lambda = 1.0 / 3.0;
    int k = 1;
    double tol = kEquivalenceTol;
    double perturb = 0.0; ///< added to the mapped LiDF tau; test hook
};

/// Prints one line per variant compared with Long. Returns kExitOk when all
/// hold, kExitVerification otherwise.
int check_equivalence(const EquivalenceOptions &options, std::ostream &out);

struct CrosscheckOptions {
    int qubits = 8;
    std::uint64_t seed = 42;
    int samples = 100;
    double tol = kEquivalenceTol;
    int max_k = 25;
};

struct CrosscheckSummary {
    int cases = 0;
    double max_probability_deviation = 0.0;
    double max_residual = 0.0;
    double max_amplitude_deviation = 0.0;

    bool passed(double tol) const {
        return max_probability_deviation < tol && max_residual < tol;
    }
};

/// Name of the pseudo-random engine crosscheck draws cases from.
inline constexpr std::string_view kCrosscheckRng = "mt19937_64";

/**
 * Draws `samples` random problems (target set, algorithm, phases, k <= max_k)
 * over n qubits from a seeded generator and runs each on both engines.
 */
CrosscheckSummary crosscheck(const CrosscheckOptions &options);

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace grover_phase::cli
