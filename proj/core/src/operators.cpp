#include "grover_phase/operators.hpp"

#include <cmath>
#include <type_traits>

namespace grover_phase {
namespace {

struct DiffusionCoefficients {
    Complex projector; // multiplies |s><s|
    Complex identity;  // multiplies I
};

DiffusionCoefficients diffusion_coefficients(const PhaseParams &params) {
    return std::visit(
        [](const auto &p) -> DiffusionCoefficients {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return {2.0, -1.0};
            } else if constexpr (std::is_same_v<T, LongParams>) {
                return {1.0 - unit_phasor(p.diffusion_phase()), -1.0};
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return {2.0 * std::cos(p.tau) * unit_phasor(p.tau), -1.0};
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                return {unit_phasor(p.gamma1) - unit_phasor(p.gamma2),
                        unit_phasor(p.gamma2)};
            } else {
                return {1.0 - unit_phasor(p.beta), unit_phasor(p.beta)};
            }
        },
        params);
}

} // namespace

Mat2C uniform_projector(const SubspaceGeometry &g) {
    const double s = g.sin_theta();
    const double c = g.cos_theta();
    return {s * s, s * c, s * c, c * c};
}

Mat2C subspace_oracle(const PhaseParams &params) {
    require_finite(params);
    return std::visit(
        [](const auto &p) -> Mat2C {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return Mat2C::diagonal(-1.0, 1.0);
            } else if constexpr (std::is_same_v<T, LongParams>) {
                return Mat2C::diagonal(unit_phasor(p.oracle_phase()), 1.0);
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return Mat2C::diagonal(
                    1.0 - 2.0 * std::cos(p.tau) * unit_phasor(p.tau), 1.0);
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                return Mat2C::diagonal(-unit_phasor(p.eta1),
                                       -unit_phasor(p.eta2));
            } else {
                return Mat2C::diagonal(unit_phasor(-p.beta), 1.0);
            }
        },
        params);
}

Mat2C subspace_diffusion(const PhaseParams &params, const SubspaceGeometry &g) {
    require_finite(params);
    const auto [c, d] = diffusion_coefficients(params);
    return c * uniform_projector(g) + d * Mat2C::identity();
}

IterationMatrix iteration_matrix(const PhaseParams &params,
                                 const SubspaceGeometry &g) {
    return {subspace_diffusion(params, g) * subspace_oracle(params), params, g};
}

Mat2C long_matched_closed_form(double phi, const SubspaceGeometry &g) {
    const double s = g.sin_theta();
    const double c = g.cos_theta();
    const double s2 = s * s;
    const double c2 = c * c;
    const Complex w = unit_phasor(phi);
    return {-w * (s2 * w + c2), s * c * (1.0 - w), s * c * w * (1.0 - w),
            -(c2 * w + s2)};
}

} // namespace grover_phase
