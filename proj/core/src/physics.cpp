#include "dqd/physics.hpp"

#include <cmath>
#include <stdexcept>

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"

namespace dqd {

namespace {

void require_coupled_finite(double gamma_ev, double delta_ev) {
    if (!std::isfinite(gamma_ev) || !std::isfinite(delta_ev)) {
        throw std::domain_error("gamma and delta must be finite");
    }
    if (!(gamma_ev > 0.0)) {
        throw InvalidDeviceError("tunneling energy gamma must be > 0 (uncoupled dots)");
    }
}

}  // namespace

Mat2 hamiltonian_matrix(double gamma_ev, double delta_ev) {
    require_coupled_finite(gamma_ev, delta_ev);
    return Mat2{-delta_ev / 2.0, -gamma_ev,
                -gamma_ev, +delta_ev / 2.0};
}

GroundState ground_state(double gamma_ev, double delta_ev) {
    require_coupled_finite(gamma_ev, delta_ev);
    const double root = std::hypot(2.0 * gamma_ev, delta_ev);  // sqrt(4 g^2 + d^2)

    // alpha = (delta + root)/(2 gamma); the rationalized branch avoids
    // cancellation for large negative detuning.
    const double alpha = delta_ev >= 0.0
                             ? (delta_ev + root) / (2.0 * gamma_ev)
                             : (2.0 * gamma_ev) / (root - delta_ev);

    const double norm = std::sqrt(alpha * alpha + 1.0);
    const double amp0 = alpha / norm;
    const double amp1 = 1.0 / norm;

    GroundState gs;
    gs.e1 = -0.5 * root;
    gs.e2 = +0.5 * root;
    gs.alpha = alpha;
    gs.amp0 = amp0;
    gs.amp1 = amp1;
    // Equivalent to amp^2 but exact at delta = 0 and exactly mirror-symmetric.
    gs.p0 = 0.5 * (1.0 + delta_ev / root);
    gs.p1 = 0.5 * (1.0 - delta_ev / root);
    return gs;
}

GroundState eigensystem_numeric_oracle(double gamma_ev, double delta_ev) {
    const Mat2 h = hamiltonian_matrix(gamma_ev, delta_ev);

    // Eigenvalues from the characteristic polynomial l^2 - tr l + det = 0.
    const double tr = h.a00 + h.a11;
    const double det = h.a00 * h.a11 - h.a01 * h.a10;
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    const double e1 = 0.5 * (tr - disc);
    const double e2 = 0.5 * (tr + disc);

    // Ground eigenvector from the nullspace of (H - e1 I); take the row with
    // the larger norm for stability.
    const double r0 = std::hypot(h.a00 - e1, h.a01);
    const double r1 = std::hypot(h.a10, h.a11 - e1);
    double v0, v1;
    if (r0 >= r1) {
        v0 = -h.a01;
        v1 = h.a00 - e1;
    } else {
        v0 = h.a11 - e1;
        v1 = -h.a10;
    }
    const double norm = std::hypot(v0, v1);
    v0 /= norm;
    v1 /= norm;
    if (v1 < 0.0) {
        v0 = -v0;
        v1 = -v1;
    }

    GroundState gs;
    gs.e1 = e1;
    gs.e2 = e2;
    gs.alpha = v0 / v1;
    gs.amp0 = v0;
    gs.amp1 = v1;
    gs.p0 = v0 * v0;
    gs.p1 = v1 * v1;
    return gs;
}

double mean_value(double gamma_ev, double delta_ev) {
    return ground_state(gamma_ev, delta_ev).p1;
}

double detuning_for_mean(double gamma_ev, double target_mean) {
    if (!(gamma_ev > 0.0)) {
        throw InvalidDeviceError("tunneling energy gamma must be > 0");
    }
    if (!std::isfinite(target_mean) || target_mean < 0.0 || target_mean > 1.0) {
        throw std::domain_error("target mean must lie in [0, 1]");
    }
    if (target_mean == 0.0 || target_mean == 1.0) {
        throw UnreachableBiasError("means of exactly 0 or 1 require infinite detuning");
    }
    // Algebraic inversion of p1 = (1 - delta/sqrt(4 g^2 + d^2))/2.
    return gamma_ev * (1.0 - 2.0 * target_mean) /
           std::sqrt(target_mean * (1.0 - target_mean));
}

double detuning_for_mean_thermal(double kt_ev, double target_mean) {
    if (!(kt_ev > 0.0)) {
        throw std::domain_error("kT must be > 0");
    }
    if (!std::isfinite(target_mean) || target_mean < 0.0 || target_mean > 1.0) {
        throw std::domain_error("target mean must lie in [0, 1]");
    }
    if (target_mean == 0.0 || target_mean == 1.0) {
        throw UnreachableBiasError("means of exactly 0 or 1 require infinite detuning");
    }
    // Inversion of p1 = 1/(1 + exp(delta/kT)).
    return kt_ev * std::log((1.0 - target_mean) / target_mean);
}

double detuning_from_field(const std::array<double, 3>& e_field_v_per_m,
                           const std::array<double, 3>& dot_separation_m,
                           double charge_c) {
    double dot = 0.0;
    for (int i = 0; i < 3; ++i) {
        dot += e_field_v_per_m[i] * dot_separation_m[i];
    }
    if (!std::isfinite(dot) || !std::isfinite(charge_c)) {
        throw std::domain_error("field, separation and charge must be finite");
    }
    // -q (E . a) in joules, converted to eV.
    return -charge_c * dot / constants::joules_per_ev;
}

double detuning_from_voltage(double voltage_v, double charge_c) {
    if (!std::isfinite(voltage_v) || !std::isfinite(charge_c)) {
        throw std::domain_error("voltage and charge must be finite");
    }
    return charge_c * voltage_v / constants::joules_per_ev;
}

std::pair<double, double> thermal_probabilities(double delta_ev, double kt_ev) {
    if (!(kt_ev > 0.0)) {
        throw std::domain_error("kT must be > 0");
    }
    if (!std::isfinite(delta_ev)) {
        throw std::domain_error("delta must be finite");
    }
    const double p1 = 1.0 / (1.0 + std::exp(delta_ev / kt_ev));
    return {1.0 - p1, p1};
}

}  // namespace dqd
