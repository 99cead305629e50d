#pragma once

#include <array>
#include <utility>

namespace dqd {

// 2x2 real symmetric matrix in the localized-state basis {|0>, |1>}.
struct Mat2 {
    double a00, a01;
    double a10, a11;
};

// Eigensystem summary for the coupled two-level system. All energies in eV.
struct GroundState {
    double e1;     // ground-state energy
    double e2;     // excited-state energy (= -e1, traceless Hamiltonian)
    double alpha;  // mixing coefficient, > 0 for gamma > 0
    double amp0;   // real non-negative amplitude of |0> in the ground state
    double amp1;   // real non-negative amplitude of |1>
    double p0;     // = amp0^2
    double p1;     // = amp1^2
};

// H = [[-delta/2, -gamma], [-gamma, +delta/2]]. Throws InvalidDeviceError for
// gamma <= 0 and std::domain_error for non-finite inputs.
Mat2 hamiltonian_matrix(double gamma_ev, double delta_ev);

// Closed-form eigensystem of the two-level Hamiltonian.
GroundState ground_state(double gamma_ev, double delta_ev);

// Independent check: diagonalizes the 2x2 matrix numerically (characteristic
// polynomial + nullspace solve), without using the closed-form expressions.
GroundState eigensystem_numeric_oracle(double gamma_ev, double delta_ev);

// Ensemble mean of position measurements; equals ground_state(...).p1.
double mean_value(double gamma_ev, double delta_ev);

// Inverse of mean_value in delta: detuning that programs the given mean.
// Throws UnreachableBiasError for target 0 or 1, std::domain_error outside [0,1].
double detuning_for_mean(double gamma_ev, double target_mean);

// Thermal-mode counterpart: detuning such that the Boltzmann occupation of |1>
// equals target_mean.
double detuning_for_mean_thermal(double kt_ev, double target_mean);

// Field-biased detuning: delta = -q (E . a), returned in eV.
double detuning_from_field(const std::array<double, 3>& e_field_v_per_m,
                           const std::array<double, 3>& dot_separation_m,
                           double charge_c);

// Voltage-biased detuning: delta = q V, returned in eV.
double detuning_from_voltage(double voltage_v, double charge_c);

// Equilibrium occupation of the localized states at energies -delta/2, +delta/2.
// Returns (p0, p1) with p1 = 1/(1 + exp(delta/kT)). Throws for kT <= 0.
std::pair<double, double> thermal_probabilities(double delta_ev, double kt_ev);

}  // namespace dqd
