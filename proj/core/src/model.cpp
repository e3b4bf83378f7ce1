#include "grover_phase/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace grover_phase {

bool SearchSpace::is_target(std::size_t index) const {
    return std::binary_search(targets_.begin(), targets_.end(), index);
}

SearchSpace make_search_space(int qubits, std::vector<std::size_t> targets) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("search space: qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    if (targets.empty()) {
        throw std::invalid_argument(
            "search space: at least one target is required");
    }
    const std::size_t n_items = std::size_t{1} << qubits;
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    if (targets.back() >= n_items) {
        throw std::invalid_argument("search space: target index " +
                                    std::to_string(targets.back()) +
                                    " out of range for N = " +
                                    std::to_string(n_items));
    }
    return SearchSpace(qubits, std::move(targets));
}

double SubspaceGeometry::sin_theta() const { return std::sqrt(lambda_); }
double SubspaceGeometry::cos_theta() const { return std::sqrt(1.0 - lambda_); }

SubspaceGeometry geometry_from_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument(
            "geometry: target proportion must satisfy 0 < lambda <= 1");
    }
    return {std::asin(std::sqrt(lambda)), lambda};
}

SubspaceGeometry geometry_of(const SearchSpace &space) {
    return geometry_from_lambda(static_cast<double>(space.target_count()) /
                                static_cast<double>(space.size()));
}

std::string_view to_string(AlgorithmKind kind) {
    switch (kind) {
    case AlgorithmKind::Original:
        return "original";
    case AlgorithmKind::Long:
        return "long";
    case AlgorithmKind::LiDF:
        return "lidf";
    case AlgorithmKind::LiCM:
        return "licm";
    case AlgorithmKind::LiPC:
        return "lipc";
    }
    return "unknown";
}

std::optional<AlgorithmKind> parse_kind(std::string_view name) {
    std::string lowered(name);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (AlgorithmKind kind : kAllKinds) {
        if (to_string(kind) == lowered) {
            return kind;
        }
    }
    return std::nullopt;
}

AlgorithmKind kind_of(const PhaseParams &params) {
    return static_cast<AlgorithmKind>(params.index());
}

void require_finite(const PhaseParams &params) {
    auto ok = [](std::initializer_list<double> xs) {
        return std::all_of(xs.begin(), xs.end(),
                           [](double x) { return std::isfinite(x); });
    };
    const bool finite = std::visit(
        [&](const auto &p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return true;
            } else if constexpr (std::is_same_v<T, LongParams>) {
                return ok({p.phi, p.diffusion_phase()});
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return ok({p.tau});
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                return ok({p.gamma1, p.gamma2, p.eta1, p.eta2});
            } else {
                return ok({p.beta});
            }
        },
        params);
    if (!finite) {
        throw std::invalid_argument("phase parameters must be finite");
    }
}

void require_kind(AlgorithmKind kind, const PhaseParams &params) {
    if (kind_of(params) != kind) {
        throw std::invalid_argument(
            "phase parameters for '" + std::string(to_string(kind_of(params))) +
            "' used with algorithm '" + std::string(to_string(kind)) + "'");
    }
    require_finite(params);
}

std::string describe(const PhaseParams &params) {
    char buf[160];
    std::visit(
        [&](const auto &p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                std::snprintf(buf, sizeof buf, "original");
            } else if constexpr (std::is_same_v<T, LongParams>) {
                if (p.diffusion_phi) {
                    std::snprintf(buf, sizeof buf, "long(phi=%.12g, phi_s=%.12g)",
                                  p.phi, *p.diffusion_phi);
                } else {
                    std::snprintf(buf, sizeof buf, "long(phi=%.12g)", p.phi);
                }
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                std::snprintf(buf, sizeof buf, "lidf(tau=%.12g)", p.tau);
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                std::snprintf(buf, sizeof buf,
                              "licm(g1=%.12g, g2=%.12g, e1=%.12g, e2=%.12g)",
                              p.gamma1, p.gamma2, p.eta1, p.eta2);
            } else {
                std::snprintf(buf, sizeof buf, "lipc(beta=%.12g)", p.beta);
            }
        },
        params);
    return buf;
}

} // namespace grover_phase
