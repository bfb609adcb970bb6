#ifndef PJJ_LIOUVILLIAN_HPP
#define PJJ_LIOUVILLIAN_HPP

// Right-hand side of the fluctuation master equation,
//   d(rho)/dt = -(i/hbar)[H_f, rho]
//               - (kappa/2hbar) sum_k ({n_k, rho} - 2 a_k rho a_k^dag),
// with the time-dependent H_f of the two coupled Kerr modes,
//   H_f = sum_k [ Delta_k n_k + U(conj(alpha_k)^2 a_k^2 + alpha_k^2 a_k^dag^2) ]
//       + sum_k U [ a_k^dag a_k^dag a_k a_k + 2 conj(alpha_k) a_k^dag a_k a_k
//                   + 2 alpha_k a_k^dag a_k^dag a_k ]            (full only)
//       - J (a_L^dag a_R + a_R^dag a_L).
//
// H_f couples |nL,nR> only to neighbours at 11 fixed index offsets, so the
// hot kernel applies it band-by-band in O(dim^2) instead of O(dim^3).
// A dense Eigen reference implementation is kept alongside for testing;
// tools/bench_kernels compares the two.

#include <array>
#include <vector>

#include "pjj/hilbert.hpp"
#include "pjj/meanfield.hpp"

namespace pjj {

// Dense H_f built from hilbert operator algebra. Reference path; the banded
// kernel below must reproduce it exactly.
Operator fluctuation_hamiltonian(cplx alpha_L, cplx alpha_R, const SystemParams& params,
                                 FockCutoff cutoff, bool linearized);

// Dense master-equation RHS via matrix products. Reference path.
Matrix apply_liouvillian_reference(const Operator& hamiltonian, const Matrix& rho,
                                   const SystemParams& params, FockCutoff cutoff);

// Banded fast kernel. set_meanfield() rebuilds the 11 coefficient bands for
// the current mean-field amplitudes; apply() evaluates d(rho)/dt.
// apply() works column-by-column and writes disjoint columns, so the
// parallel path is bitwise identical to the serial one.
class LiouvillianKernel {
  public:
    static constexpr int kBands = 11;

    LiouvillianKernel(const SystemParams& params, FockCutoff cutoff, bool linearized);

    void set_meanfield(cplx alpha_L, cplx alpha_R);

    // out = d(rho)/dt; rho and out are dim x dim column-major, must not alias.
    void apply(const cplx* rho, cplx* out, bool parallel) const;
    void apply(const Matrix& rho, Matrix& out, bool parallel) const;

    int dim() const { return dim_; }
    FockCutoff cutoff() const { return cutoff_; }
    bool linearized() const { return linearized_; }

    // Materialize H_f from the stored bands (tests compare this against
    // fluctuation_hamiltonian).
    Operator dense_hamiltonian() const;

  private:
    SystemParams params_;
    FockCutoff cutoff_;
    bool linearized_;
    int mode_dim_;
    int dim_;
    std::array<int, kBands> offsets_;
    // band_[b][i] = -(i/hbar) * H[i, i + offsets_[b]] for the off-diagonal
    // bands; boundary entries are zeroed explicitly.
    std::array<std::vector<cplx>, kBands> band_;
    std::vector<double> h_diag_over_hbar_;  // H[i,i]/hbar
    std::vector<double> loss_diag_;         // -(kappa/2hbar)(nL+nR)
    std::vector<double> gain_L_, gain_R_;   // sqrt(kappa/hbar)*sqrt(n+1), 0 at the top level
    std::vector<int> n_l_, n_r_;
};

// Fixed-step RK4 for d(X)/dt = L(t){X} with the mean-field amplitudes
// interpolated from a stored trajectory at every stage. X need not be
// Hermitian (quantum-regression propagation reuses this).
class LindbladPropagator {
  public:
    LindbladPropagator(const SystemParams& params, FockCutoff cutoff, bool linearized,
                       const MeanFieldTrajectory* mf, bool parallel_kernel);

    void step(Matrix& x, double t, double dt);
    // Integer number of equal substeps of size <= dt_hint landing exactly
    // on t_to.
    void advance(Matrix& x, double t_from, double t_to, double dt_hint);

    const LiouvillianKernel& kernel() const { return kernel_; }

  private:
    LiouvillianKernel kernel_;
    const MeanFieldTrajectory* mf_;
    bool parallel_;
    Matrix k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace pjj

#endif
