#ifndef PJJ_MEANFIELD_HPP
#define PJJ_MEANFIELD_HPP

// Coupled c-number equations for the two mode amplitudes,
//   i hbar d(alpha_L)/dt = [Delta_L - i kappa/2 + U |alpha_L|^2] alpha_L
//                          - J alpha_R + P_L(t),
// and symmetrically for R, integrated with fixed-step RK4.

#include <functional>
#include <utility>
#include <vector>

#include "pjj/types.hpp"

namespace pjj {

struct SystemParams {
    double U = 0.0014;     // meV, single-particle nonlinearity
    double J = 0.4;        // meV, tunneling amplitude
    double delta_L = -0.6; // meV, laser detuning hbar(w_c - w_laser)
    double delta_R = -0.6; // meV
    double kappa = 0.125;  // meV, linewidth kappa = hbar/tau

    double tau() const { return kHbar / kappa; }
    void validate() const;
};

struct PulseSpec {
    double p_L = 6.25;       // meV drive amplitude, left mode
    double p_R = 30.514705882352942; // meV, right mode
    double t0 = 3.0;         // ps, pulse center
    double sigma_t = 1.5658; // ps, width of exp[-(t-t0)^2/sigma^2]
    double rel_phase = 0.0;  // rad, phase of the right drive relative to left

    double z0() const { return (p_L - p_R) / (p_L + p_R); }
    void validate() const;
};

struct MeanFieldState {
    cplx alpha_L{0.0, 0.0};
    cplx alpha_R{0.0, 0.0};

    bool finite() const;
};

using DrivePair = std::pair<cplx, cplx>;
using DriveFn = std::function<DrivePair(double)>;

DrivePair drive_amplitude(const PulseSpec& spec, double t);
DriveFn gaussian_drive(const PulseSpec& spec);

MeanFieldState meanfield_rhs(const MeanFieldState& s, double t, const SystemParams& params,
                             const DriveFn& drive);

// Uniform-grid trajectory; amplitudes and drives stored at every step.
struct MeanFieldTrajectory {
    double t_start = 0.0;
    double dt = 0.0;
    std::vector<MeanFieldState> states;
    std::vector<DrivePair> drives;

    std::size_t size() const { return states.size(); }
    double time_at(std::size_t i) const { return t_start + double(i) * dt; }
    double t_end() const { return time_at(size() - 1); }
    // Linear interpolation of the amplitudes; clamps outside the grid.
    MeanFieldState interpolate(double t) const;
};

MeanFieldTrajectory integrate_meanfield(const SystemParams& params, const DriveFn& drive,
                                        double t_start, double t_end, double dt,
                                        MeanFieldState initial = {});
MeanFieldTrajectory integrate_meanfield(const SystemParams& params, const PulseSpec& pulses,
                                        double t_start, double t_end, double dt,
                                        MeanFieldState initial = {});

// z(t) = (I_L - I_R)/(I_L + I_R); samples where the total intensity
// underflows (below 1e-12 of its peak) are flagged invalid.
struct ImbalanceSeries {
    std::vector<double> z;
    std::vector<std::uint8_t> valid;
};

ImbalanceSeries population_imbalance(const MeanFieldTrajectory& traj);

}  // namespace pjj

#endif
