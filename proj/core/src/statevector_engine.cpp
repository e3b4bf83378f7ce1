#include "grover_phase/statevector_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace grover_phase {
namespace {

// (a, b) of I_t = a I + b |t><t|, read straight off each operator definition.
std::pair<Complex, Complex> oracle_terms(const PhaseParams &params) {
    return std::visit(
        [](const auto &p) -> std::pair<Complex, Complex> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return {1.0, -2.0};
            } else if constexpr (std::is_same_v<T, LongParams>) {
                return {1.0, -(1.0 - std::polar(1.0, p.oracle_phase()))};
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return {1.0, -2.0 * std::cos(p.tau) * std::polar(1.0, p.tau)};
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                return {-std::polar(1.0, p.eta2),
                        -(std::polar(1.0, p.eta1) - std::polar(1.0, p.eta2))};
            } else {
                return {1.0, -(1.0 - std::polar(1.0, -p.beta))};
            }
        },
        params);
}

// (c, d) of I_s = c |s><s| + d I.
std::pair<Complex, Complex> diffusion_terms(const PhaseParams &params) {
    return std::visit(
        [](const auto &p) -> std::pair<Complex, Complex> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, OriginalParams>) {
                return {2.0, -1.0};
            } else if constexpr (std::is_same_v<T, LongParams>) {
                return {1.0 - std::polar(1.0, p.diffusion_phase()), -1.0};
            } else if constexpr (std::is_same_v<T, LiDFParams>) {
                return {2.0 * std::cos(p.tau) * std::polar(1.0, p.tau), -1.0};
            } else if constexpr (std::is_same_v<T, LiCMParams>) {
                return {std::polar(1.0, p.gamma1) - std::polar(1.0, p.gamma2),
                        std::polar(1.0, p.gamma2)};
            } else {
                return {1.0 - std::polar(1.0, p.beta), std::polar(1.0, p.beta)};
            }
        },
        params);
}

void oracle_in_place(std::vector<Complex> &amps, const SearchSpace &space,
                     Complex a, Complex b) {
    const Complex on_target = a + b;
    std::vector<Complex> saved;
    saved.reserve(space.target_count());
    for (std::size_t t : space.targets()) {
        saved.push_back(amps[t]);
    }
    for (Complex &z : amps) {
        z *= a;
    }
    std::size_t i = 0;
    for (std::size_t t : space.targets()) {
        amps[t] = on_target * saved[i++];
    }
}

void diffusion_in_place(std::vector<Complex> &amps, Complex c, Complex d) {
    // c <s|v> |s> has every component c * sum(v) / N.
    const Complex sum = std::accumulate(amps.begin(), amps.end(), Complex{});
    const Complex shift = c * sum / static_cast<double>(amps.size());
    for (Complex &z : amps) {
        z = shift + d * z;
    }
}

void require_simulable(const SearchSpace &space) {
    if (space.qubits() > kMaxStatevectorQubits) {
        throw std::invalid_argument(
            "statevector engine: at most " +
            std::to_string(kMaxStatevectorQubits) + " qubits supported");
    }
}

} // namespace

StateVector::StateVector(SearchSpace space, std::vector<Complex> amplitudes)
    : space_(std::move(space)), amps_(std::move(amplitudes)) {
    if (amps_.size() != space_.size()) {
        throw std::invalid_argument(
            "statevector: amplitude count does not match N");
    }
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const Complex &z : amps_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

StateVector uniform_state(const SearchSpace &space) {
    require_simulable(space);
    const double amp = 1.0 / std::sqrt(static_cast<double>(space.size()));
    return StateVector(space, std::vector<Complex>(space.size(), amp));
}

StateVector apply_oracle(StateVector v, const PhaseParams &params) {
    require_finite(params);
    const auto [a, b] = oracle_terms(params);
    oracle_in_place(v.amplitudes(), v.space(), a, b);
    return v;
}

StateVector apply_diffusion(StateVector v, const PhaseParams &params) {
    require_finite(params);
    const auto [c, d] = diffusion_terms(params);
    diffusion_in_place(v.amplitudes(), c, d);
    return v;
}

StateVector run_full(const SearchSpace &space, const PhaseParams &params,
                     int k) {
    if (k < 0) {
        throw std::invalid_argument("iteration count must be non-negative");
    }
    require_finite(params);
    StateVector v = uniform_state(space);
    const auto [a, b] = oracle_terms(params);
    const auto [c, d] = diffusion_terms(params);
    for (int i = 0; i < k; ++i) {
        oracle_in_place(v.amplitudes(), space, a, b);
        diffusion_in_place(v.amplitudes(), c, d);
    }
    return v;
}

double target_probability(const StateVector &v) {
    double p = 0.0;
    for (std::size_t t : v.space().targets()) {
        p += std::norm(v.amplitudes()[t]);
    }
    return std::clamp(p, 0.0, 1.0);
}

SubspaceProjection project_to_subspace(const StateVector &v) {
    const SearchSpace &space = v.space();
    const auto &amps = v.amplitudes();
    const std::size_t n_target = space.target_count();
    const std::size_t n_other = space.size() - n_target;

    Complex target_sum{}, total_sum{};
    for (std::size_t t : space.targets()) {
        target_sum += amps[t];
    }
    total_sum = std::accumulate(amps.begin(), amps.end(), Complex{});
    const Complex other_sum = total_sum - target_sum;

    // |alpha> has components 1/sqrt(M) on targets, |beta> 1/sqrt(N-M) elsewhere.
    const Complex a = target_sum / std::sqrt(static_cast<double>(n_target));
    const Complex b = n_other == 0
                          ? Complex{}
                          : other_sum / std::sqrt(static_cast<double>(n_other));
    const Complex on_target = a / std::sqrt(static_cast<double>(n_target));
    const Complex off_target =
        n_other == 0 ? Complex{} : b / std::sqrt(static_cast<double>(n_other));

    double residual2 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        residual2 +=
            std::norm(amps[i] - (space.is_target(i) ? on_target : off_target));
    }
    return {{a, b}, std::sqrt(residual2)};
}

} // namespace grover_phase
