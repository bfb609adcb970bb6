#include "pjj/liouvillian.hpp"

#include <cmath>

namespace pjj {

Operator fluctuation_hamiltonian(cplx alpha_L, cplx alpha_R, const SystemParams& params,
                                 FockCutoff cutoff, bool linearized) {
    const Matrix a = annihilation(cutoff);
    const Matrix a_l = embed(a, Mode::L, cutoff);
    const Matrix a_r = embed(a, Mode::R, cutoff);
    const double u = params.U;

    Matrix h = Matrix::Zero(cutoff.composite_dim(), cutoff.composite_dim());
    const cplx alphas[2] = {alpha_L, alpha_R};
    const double deltas[2] = {params.delta_L, params.delta_R};
    const Matrix* ops[2] = {&a_l, &a_r};
    for (int k = 0; k < 2; ++k) {
        const Matrix& ak = *ops[k];
        const Matrix akd = ak.adjoint();
        const cplx al = alphas[k];
        h += deltas[k] * (akd * ak);
        h += u * (std::conj(al) * std::conj(al) * (ak * ak) + al * al * (akd * akd));
        if (!linearized) {
            h += u * (akd * akd * ak * ak);
            h += 2.0 * u * (std::conj(al) * (akd * ak * ak) + al * (akd * akd * ak));
        }
    }
    h -= params.J * (a_l.adjoint() * a_r + a_r.adjoint() * a_l);
    return h;
}

Matrix apply_liouvillian_reference(const Operator& hamiltonian, const Matrix& rho,
                                   const SystemParams& params, FockCutoff cutoff) {
    const Matrix a = annihilation(cutoff);
    const Matrix a_l = embed(a, Mode::L, cutoff);
    const Matrix a_r = embed(a, Mode::R, cutoff);
    const Matrix n_l = a_l.adjoint() * a_l;
    const Matrix n_r = a_r.adjoint() * a_r;

    Matrix out = -(kImag / kHbar) * (hamiltonian * rho - rho * hamiltonian);
    const double g = params.kappa / (2.0 * kHbar);
    out -= g * (n_l * rho + rho * n_l - 2.0 * (a_l * rho * a_l.adjoint()));
    out -= g * (n_r * rho + rho * n_r - 2.0 * (a_r * rho * a_r.adjoint()));
    return out;
}

LiouvillianKernel::LiouvillianKernel(const SystemParams& params, FockCutoff cutoff,
                                     bool linearized)
    : params_(params), cutoff_(cutoff), linearized_(linearized), mode_dim_(cutoff.mode_dim()),
      dim_(cutoff.composite_dim()) {
    cutoff.validate();
    params.validate();
    const int d = mode_dim_;
    offsets_ = {0, 1, -1, 2, -2, d - 1, -(d - 1), d, -d, 2 * d, -2 * d};
    for (auto& b : band_) b.assign(dim_, cplx(0, 0));
    h_diag_over_hbar_.assign(dim_, 0.0);
    loss_diag_.assign(dim_, 0.0);
    gain_L_.assign(dim_, 0.0);
    gain_R_.assign(dim_, 0.0);
    n_l_.resize(dim_);
    n_r_.resize(dim_);

    const double g = params_.kappa / kHbar;
    for (int i = 0; i < dim_; ++i) {
        const int nl = i / d, nr = i % d;
        n_l_[i] = nl;
        n_r_[i] = nr;
        loss_diag_[i] = -0.5 * g * double(nl + nr);
        gain_L_[i] = nl < cutoff_.n_max ? std::sqrt(g * double(nl + 1)) : 0.0;
        gain_R_[i] = nr < cutoff_.n_max ? std::sqrt(g * double(nr + 1)) : 0.0;
    }
    set_meanfield(0.0, 0.0);
}

void LiouvillianKernel::set_meanfield(cplx alpha_L, cplx alpha_R) {
    const int d = mode_dim_;
    const int top = cutoff_.n_max;
    const double u = params_.U;
    const cplx pref = -kImag / kHbar;  // folded into every band

    const cplx par_l = u * alpha_L * alpha_L;            // a_L^dag^2 coefficient
    const cplx par_r = u * alpha_R * alpha_R;
    const cplx cub_l = 2.0 * u * alpha_L;                // a_L^dag a_L^dag a_L coefficient
    const cplx cub_r = 2.0 * u * alpha_R;

    for (int i = 0; i < dim_; ++i) {
        const int nl = n_l_[i], nr = n_r_[i];
        double h = params_.delta_L * nl + params_.delta_R * nr;
        if (!linearized_) h += u * double(nl * (nl - 1) + nr * (nr - 1));
        h_diag_over_hbar_[i] = h / kHbar;

        // offsets +1/-1: R-mode cubic ladder terms (full model only)
        band_[1][i] = (!linearized_ && nr < top)
                          ? pref * std::conj(cub_r) * (double(nr) * std::sqrt(double(nr + 1)))
                          : cplx(0, 0);
        band_[2][i] = (!linearized_ && nr >= 1)
                          ? pref * cub_r * (double(nr - 1) * std::sqrt(double(nr)))
                          : cplx(0, 0);
        // offsets +2/-2: R-mode parametric terms
        band_[3][i] = nr + 2 <= top
                          ? pref * std::conj(par_r) * std::sqrt(double((nr + 1) * (nr + 2)))
                          : cplx(0, 0);
        band_[4][i] = nr >= 2 ? pref * par_r * std::sqrt(double(nr * (nr - 1))) : cplx(0, 0);
        // offsets +-(d-1): tunneling
        band_[5][i] = (nl < top && nr >= 1)
                          ? pref * (-params_.J) * std::sqrt(double((nl + 1) * nr))
                          : cplx(0, 0);
        band_[6][i] = (nl >= 1 && nr < top)
                          ? pref * (-params_.J) * std::sqrt(double(nl * (nr + 1)))
                          : cplx(0, 0);
        // offsets +d/-d: L-mode cubic ladder terms
        band_[7][i] = (!linearized_ && nl < top)
                          ? pref * std::conj(cub_l) * (double(nl) * std::sqrt(double(nl + 1)))
                          : cplx(0, 0);
        band_[8][i] = (!linearized_ && nl >= 1)
                          ? pref * cub_l * (double(nl - 1) * std::sqrt(double(nl)))
                          : cplx(0, 0);
        // offsets +2d/-2d: L-mode parametric terms
        band_[9][i] = nl + 2 <= top
                          ? pref * std::conj(par_l) * std::sqrt(double((nl + 1) * (nl + 2)))
                          : cplx(0, 0);
        band_[10][i] = nl >= 2 ? pref * par_l * std::sqrt(double(nl * (nl - 1))) : cplx(0, 0);
    }
}

void LiouvillianKernel::apply(const cplx* rho, cplx* out, bool parallel) const {
    const int n = dim_;
    const int d = mode_dim_;
    const double* __restrict kd = loss_diag_.data();
    const double* __restrict hd = h_diag_over_hbar_.data();
    const double* __restrict gl = gain_L_.data();
    const double* __restrict gr = gain_R_.data();

#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        const cplx* __restrict col = rho + std::size_t(j) * n;
        cplx* __restrict o = out + std::size_t(j) * n;

        // diagonal of H plus the anticommutator part of the loss
        const double kdj = kd[j];
        const double hdj = hd[j];
#pragma omp simd
        for (int i = 0; i < n; ++i) o[i] = cplx(kd[i] + kdj, hdj - hd[i]) * col[i];

        for (int b = 1; b < kBands; ++b) {
            const int off = offsets_[b];
            const cplx* __restrict c = band_[b].data();
            // H*rho: shifted read within the same column
            const int i_lo = off < 0 ? -off : 0;
            const int i_hi = off > 0 ? n - off : n;
#pragma omp simd
            for (int i = i_lo; i < i_hi; ++i) o[i] += c[i] * col[i + off];
            // rho*H: scalar times a neighbouring column
            const int jc = j + off;
            if (jc >= 0 && jc < n) {
                const cplx s = std::conj(c[j]);
                if (s != cplx(0, 0)) {
                    const cplx* __restrict colc = rho + std::size_t(jc) * n;
#pragma omp simd
                    for (int i = 0; i < n; ++i) o[i] += s * colc[i];
                }
            }
        }

        // sandwich terms a_k rho a_k^dag
        if (gl[j] != 0.0) {
            const double s = gl[j];
            const cplx* __restrict colc = rho + std::size_t(j + d) * n;
#pragma omp simd
            for (int i = 0; i < n - d; ++i) o[i] += (s * gl[i]) * colc[i + d];
        }
        if (gr[j] != 0.0) {
            const double s = gr[j];
            const cplx* __restrict colc = rho + std::size_t(j + 1) * n;
#pragma omp simd
            for (int i = 0; i < n - 1; ++i) o[i] += (s * gr[i]) * colc[i + 1];
        }
    }
}

void LiouvillianKernel::apply(const Matrix& rho, Matrix& out, bool parallel) const {
    if (rho.rows() != dim_ || rho.cols() != dim_)
        throw DimensionMismatch("LiouvillianKernel::apply: matrix dimension mismatch");
    out.resize(dim_, dim_);
    apply(rho.data(), out.data(), parallel);
}

Operator LiouvillianKernel::dense_hamiltonian() const {
    Matrix h = Matrix::Zero(dim_, dim_);
    const cplx unfold = kImag * kHbar;  // inverse of the -i/hbar band prefactor
    for (int i = 0; i < dim_; ++i) h(i, i) = h_diag_over_hbar_[i] * kHbar;
    for (int b = 1; b < kBands; ++b) {
        const int off = offsets_[b];
        const int i_lo = off < 0 ? -off : 0;
        const int i_hi = off > 0 ? dim_ - off : dim_;
        for (int i = i_lo; i < i_hi; ++i) h(i, i + off) = band_[b][i] * unfold;
    }
    return h;
}

LindbladPropagator::LindbladPropagator(const SystemParams& params, FockCutoff cutoff,
                                       bool linearized, const MeanFieldTrajectory* mf,
                                       bool parallel_kernel)
    : kernel_(params, cutoff, linearized), mf_(mf), parallel_(parallel_kernel) {
    const int n = kernel_.dim();
    k1_.resize(n, n);
    k2_.resize(n, n);
    k3_.resize(n, n);
    k4_.resize(n, n);
    tmp_.resize(n, n);
}

void LindbladPropagator::step(Matrix& x, double t, double dt) {
    auto set_alpha = [&](double ts) {
        const MeanFieldState s = mf_->interpolate(ts);
        kernel_.set_meanfield(s.alpha_L, s.alpha_R);
    };
    set_alpha(t);
    kernel_.apply(x.data(), k1_.data(), parallel_);
    tmp_ = x + (0.5 * dt) * k1_;
    set_alpha(t + 0.5 * dt);
    kernel_.apply(tmp_.data(), k2_.data(), parallel_);
    tmp_ = x + (0.5 * dt) * k2_;
    kernel_.apply(tmp_.data(), k3_.data(), parallel_);
    tmp_ = x + dt * k3_;
    set_alpha(t + dt);
    kernel_.apply(tmp_.data(), k4_.data(), parallel_);
    x += (dt / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
}

void LindbladPropagator::advance(Matrix& x, double t_from, double t_to, double dt_hint) {
    if (t_to <= t_from) return;
    const auto n = std::max<long>(1, long(std::ceil((t_to - t_from) / dt_hint - 1e-9)));
    const double h = (t_to - t_from) / double(n);
    for (long k = 0; k < n; ++k) step(x, t_from + double(k) * h, h);
}

}  // namespace pjj
