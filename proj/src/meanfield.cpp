#include "pjj/meanfield.hpp"

#include <cmath>

namespace pjj {

void SystemParams::validate() const {
    if (!(kappa > 0.0)) throw DomainError("SystemParams: kappa must be positive");
    if (J < 0.0) throw DomainError("SystemParams: J must be nonnegative");
    if (U < 0.0) throw DomainError("SystemParams: U must be nonnegative");
}

void PulseSpec::validate() const {
    if (!(sigma_t > 0.0)) throw DomainError("PulseSpec: sigma_t must be positive");
    if (p_L < 0.0 || p_R < 0.0) throw DomainError("PulseSpec: amplitudes must be nonnegative");
}

bool MeanFieldState::finite() const {
    return std::isfinite(alpha_L.real()) && std::isfinite(alpha_L.imag()) &&
           std::isfinite(alpha_R.real()) && std::isfinite(alpha_R.imag());
}

DrivePair drive_amplitude(const PulseSpec& spec, double t) {
    const double u = (t - spec.t0) / spec.sigma_t;
    const double env = std::exp(-u * u);
    return {spec.p_L * env, spec.p_R * env * std::exp(kImag * spec.rel_phase)};
}

DriveFn gaussian_drive(const PulseSpec& spec) {
    return [spec](double t) { return drive_amplitude(spec, t); };
}

MeanFieldState meanfield_rhs(const MeanFieldState& s, double t, const SystemParams& params,
                             const DriveFn& drive) {
    const auto [p_l, p_r] = drive(t);
    const cplx damp(0.0, -0.5 * params.kappa);
    const cplx rhs_l = (params.delta_L + damp + params.U * std::norm(s.alpha_L)) * s.alpha_L -
                       params.J * s.alpha_R + p_l;
    const cplx rhs_r = (params.delta_R + damp + params.U * std::norm(s.alpha_R)) * s.alpha_R -
                       params.J * s.alpha_L + p_r;
    const cplx scale = cplx(0.0, -1.0) / kHbar;  // divide by i*hbar
    return {scale * rhs_l, scale * rhs_r};
}

MeanFieldTrajectory integrate_meanfield(const SystemParams& params, const DriveFn& drive,
                                        double t_start, double t_end, double dt,
                                        MeanFieldState initial) {
    params.validate();
    if (!(dt > 0.0)) throw DomainError("integrate_meanfield: dt must be positive");
    if (!(t_end > t_start)) throw DomainError("integrate_meanfield: t_end must exceed t_start");

    const auto n_steps = std::size_t(std::ceil((t_end - t_start) / dt - 1e-9));
    MeanFieldTrajectory traj;
    traj.t_start = t_start;
    traj.dt = dt;
    traj.states.reserve(n_steps + 1);
    traj.drives.reserve(n_steps + 1);

    MeanFieldState s = initial;
    traj.states.push_back(s);
    traj.drives.push_back(drive(t_start));
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t = t_start + double(k) * dt;
        const MeanFieldState k1 = meanfield_rhs(s, t, params, drive);
        const MeanFieldState s2{s.alpha_L + 0.5 * dt * k1.alpha_L, s.alpha_R + 0.5 * dt * k1.alpha_R};
        const MeanFieldState k2 = meanfield_rhs(s2, t + 0.5 * dt, params, drive);
        const MeanFieldState s3{s.alpha_L + 0.5 * dt * k2.alpha_L, s.alpha_R + 0.5 * dt * k2.alpha_R};
        const MeanFieldState k3 = meanfield_rhs(s3, t + 0.5 * dt, params, drive);
        const MeanFieldState s4{s.alpha_L + dt * k3.alpha_L, s.alpha_R + dt * k3.alpha_R};
        const MeanFieldState k4 = meanfield_rhs(s4, t + dt, params, drive);
        s.alpha_L += dt / 6.0 * (k1.alpha_L + 2.0 * k2.alpha_L + 2.0 * k3.alpha_L + k4.alpha_L);
        s.alpha_R += dt / 6.0 * (k1.alpha_R + 2.0 * k2.alpha_R + 2.0 * k3.alpha_R + k4.alpha_R);
        if (!s.finite())
            throw NonFinite("integrate_meanfield: non-finite amplitude at t = " +
                            std::to_string(t + dt));
        traj.states.push_back(s);
        traj.drives.push_back(drive(t + dt));
    }
    return traj;
}

MeanFieldTrajectory integrate_meanfield(const SystemParams& params, const PulseSpec& pulses,
                                        double t_start, double t_end, double dt,
                                        MeanFieldState initial) {
    pulses.validate();
    return integrate_meanfield(params, gaussian_drive(pulses), t_start, t_end, dt, initial);
}

MeanFieldState MeanFieldTrajectory::interpolate(double t) const {
    const double x = (t - t_start) / dt;
    if (x <= 0.0) return states.front();
    if (x >= double(size() - 1)) return states.back();
    const auto i = std::size_t(x);
    const double w = x - double(i);
    const auto& a = states[i];
    const auto& b = states[i + 1];
    return {(1.0 - w) * a.alpha_L + w * b.alpha_L, (1.0 - w) * a.alpha_R + w * b.alpha_R};
}

ImbalanceSeries population_imbalance(const MeanFieldTrajectory& traj) {
    ImbalanceSeries out;
    out.z.resize(traj.size());
    out.valid.resize(traj.size());
    double peak = 0.0;
    for (const auto& s : traj.states)
        peak = std::max(peak, std::norm(s.alpha_L) + std::norm(s.alpha_R));
    const double floor = 1e-12 * peak;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double i_l = std::norm(traj.states[i].alpha_L);
        const double i_r = std::norm(traj.states[i].alpha_R);
        const double tot = i_l + i_r;
        if (tot > floor && tot > 0.0) {
            out.z[i] = (i_l - i_r) / tot;
            out.valid[i] = 1;
        } else {
            out.z[i] = 0.0;
            out.valid[i] = 0;
        }
    }
    return out;
}

}  // namespace pjj
