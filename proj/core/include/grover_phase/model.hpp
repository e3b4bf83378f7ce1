#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace grover_phase {

/// Largest qubit count a SearchSpace accepts.
inline constexpr int kMaxQubits = 30;

/**
 * Database of N = 2^n items together with the marked (target) indices.
 * Targets are kept sorted and duplicate-free; there is at least one.
 */
class SearchSpace {
  public:
    int qubits() const { return qubits_; }
    std::size_t size() const { return std::size_t{1} << qubits_; }
    std::size_t target_count() const { return targets_.size(); }
    std::span<const std::size_t> targets() const { return targets_; }
    bool is_target(std::size_t index) const;

    friend SearchSpace make_search_space(int qubits,
                                         std::vector<std::size_t> targets);

  private:
    SearchSpace(int qubits, std::vector<std::size_t> targets)
        : qubits_(qubits), targets_(std::move(targets)) {}

    int qubits_;
    std::vector<std::size_t> targets_;
};

/// Throws std::invalid_argument for n outside [1, kMaxQubits], an empty
/// target set, or an index >= 2^n. Duplicates are dropped.
SearchSpace make_search_space(int qubits, std::vector<std::size_t> targets);

/**
 * The angle picture of a search problem: |s> = sin(theta)|alpha> +
 * cos(theta)|beta>, with sin^2(theta) = lambda = M/N.
 */
struct SubspaceGeometry {
    double theta;   ///< radians, in (0, pi/2]
    double lambda_; ///< target proportion M/N, in (0, 1]

    /// sin^2(theta); identical to lambda_ by construction.
    double m() const { return lambda_; }
    double sin_theta() const;
    double cos_theta() const;
};

SubspaceGeometry geometry_of(const SearchSpace &space);

/// Throws std::invalid_argument unless 0 < lambda <= 1.
SubspaceGeometry geometry_from_lambda(double lambda);

enum class AlgorithmKind { Original, Long, LiDF, LiCM, LiPC };

inline constexpr AlgorithmKind kAllKinds[] = {
    AlgorithmKind::Original, AlgorithmKind::Long, AlgorithmKind::LiDF,
    AlgorithmKind::LiCM, AlgorithmKind::LiPC};

/// The four phase-generalized variants, in their conventional 1..4 order.
inline constexpr AlgorithmKind kVariantKinds[] = {
    AlgorithmKind::Long, AlgorithmKind::LiDF, AlgorithmKind::LiCM,
    AlgorithmKind::LiPC};

std::string_view to_string(AlgorithmKind kind);
/// Accepts "original", "long", "lidf", "licm", "lipc" (case-insensitive).
std::optional<AlgorithmKind> parse_kind(std::string_view name);

struct OriginalParams {
    friend bool operator==(const OriginalParams &, const OriginalParams &) = default;
};

/// Oracle phase phi; the diffusion phase defaults to phi (matched case).
struct LongParams {
    double phi = 0.0;
    std::optional<double> diffusion_phi;

    double oracle_phase() const { return phi; }
    double diffusion_phase() const { return diffusion_phi.value_or(phi); }
    friend bool operator==(const LongParams &, const LongParams &) = default;
};

struct LiDFParams {
    double tau = 0.0;
    friend bool operator==(const LiDFParams &, const LiDFParams &) = default;
};

/// gamma1/gamma2 drive the diffusion operator, eta1/eta2 the oracle.
struct LiCMParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    friend bool operator==(const LiCMParams &, const LiCMParams &) = default;
};

struct LiPCParams {
    double beta = 0.0;
    friend bool operator==(const LiPCParams &, const LiPCParams &) = default;
};

/// Tagged phase bundle; the active alternative determines the algorithm.
using PhaseParams =
    std::variant<OriginalParams, LongParams, LiDFParams, LiCMParams, LiPCParams>;

AlgorithmKind kind_of(const PhaseParams &params);

/// Throws std::invalid_argument if the params tag is not `kind`, or if any
/// angle is non-finite.
void require_kind(AlgorithmKind kind, const PhaseParams &params);

/// Throws std::invalid_argument if any angle is NaN or infinite.
void require_finite(const PhaseParams &params);

std::string describe(const PhaseParams &params);

} // namespace grover_phase
