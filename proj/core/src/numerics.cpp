#include "grover_phase/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace grover_phase {

double normalize_angle(double angle) {
    double r = std::remainder(angle, kTwoPi); // [-pi, pi]
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

double angle_distance(double a, double b) {
    return std::abs(normalize_angle(a - b));
}

Mat2C Mat2C::adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
}

Complex Mat2C::determinant() const { return e[0] * e[3] - e[1] * e[2]; }

bool Mat2C::all_finite() const {
    return std::all_of(e.begin(), e.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

Mat2C operator*(const Mat2C &a, const Mat2C &b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
            a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
            a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Mat2C operator*(Complex s, const Mat2C &m) {
    return {s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]};
}

Mat2C operator+(const Mat2C &a, const Mat2C &b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
}

Mat2C operator-(const Mat2C &a, const Mat2C &b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
}

Amp2 operator*(const Mat2C &m, const Amp2 &v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

double max_entry_deviation(const Mat2C &a, const Mat2C &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a.e[i] - b.e[i]));
    }
    return worst;
}

double norm(const Amp2 &v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

bool is_unitary(const Mat2C &m, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_unitary: tolerance must be positive");
    }
    if (!m.all_finite()) {
        return false;
    }
    return max_entry_deviation(m * m.adjoint(), Mat2C::identity()) <= tol;
}

std::optional<UnitPhase> global_phase_align(const Mat2C &a, const Mat2C &b,
                                            double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument(
            "global_phase_align: tolerance must be positive");
    }
    const auto pivot = std::max_element(
        b.e.begin(), b.e.end(), [](const Complex &x, const Complex &y) {
            return std::abs(x) < std::abs(y);
        });
    if (std::abs(*pivot) == 0.0 || !a.all_finite() || !b.all_finite()) {
        return std::nullopt;
    }
    const auto idx = static_cast<std::size_t>(pivot - b.e.begin());
    const Complex ratio = a.e[idx] / b.e[idx];
    if (std::abs(std::abs(ratio) - 1.0) > tol) {
        return std::nullopt;
    }
    const UnitPhase chi(std::arg(ratio));
    if (max_entry_deviation(a, chi.factor() * b) > tol) {
        return std::nullopt;
    }
    return chi;
}

} // namespace grover_phase
