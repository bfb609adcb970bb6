#ifndef PJJ_HILBERT_HPP
#define PJJ_HILBERT_HPP

// Truncated two-mode Fock space: operator construction, tensor embedding,
// oracle state construction and expectation values. Everything here is a
// plain dense Eigen matrix; evolution code never exponentiates, only the
// displacement/squeeze test oracles do.

#include "pjj/types.hpp"

namespace pjj {

// Per-mode truncation. Dimension per mode is n_max+1, composite dimension
// (n_max+1)^2 with mode ordering L (slow index) x R (fast index).
struct FockCutoff {
    int n_max = 12;

    int mode_dim() const { return n_max + 1; }
    int composite_dim() const { return mode_dim() * mode_dim(); }
    void validate() const {
        if (n_max < 1) throw DomainError("FockCutoff: n_max must be >= 1");
    }
};

using Operator = Matrix;
using StateVector = Vector;

// Flat composite index for |nL, nR>.
inline int composite_index(int n_l, int n_r, FockCutoff cutoff) {
    return n_l * cutoff.mode_dim() + n_r;
}

Operator identity_op(int dim);
Operator annihilation(FockCutoff cutoff);
Operator creation(FockCutoff cutoff);
Operator number_op(FockCutoff cutoff);

// Kronecker product, first factor = slow index. embed() routes every
// single-mode operator through the fixed L x R ordering.
Operator tensor(const Operator& a, const Operator& b);
Operator embed(const Operator& op, Mode which, FockCutoff cutoff);

// Unitary oracles built by eigendecomposition of the (anti-Hermitian)
// generator on the truncated space.
//   displacement: exp(alpha a^dag - conj(alpha) a)
//   squeeze:      exp((conj(xi) a^2 - xi a^dag^2)/2), xi = r e^{i theta},
// so squeeze(r)|0> carries sinh^2(r) quanta.
Operator displacement(cplx alpha, FockCutoff cutoff);
Operator squeeze(cplx xi, FockCutoff cutoff);

// Weight of the ideal (untruncated) state that falls beyond n_max; the
// truncation warning for the oracles above.
double coherent_tail_mass(cplx alpha, FockCutoff cutoff);
double squeezed_tail_mass(double r, FockCutoff cutoff);

StateVector fock_state(int n, FockCutoff cutoff);
// Analytic coherent-state amplitudes, renormalized after truncation.
StateVector coherent_state(cplx alpha, FockCutoff cutoff);
// displacement(alpha) * squeeze(xi) |0>, the displaced squeezed vacuum.
StateVector squeezed_coherent_state(cplx alpha, cplx xi, FockCutoff cutoff);

cplx expectation(const StateVector& psi, const Operator& op);
cplx expectation(const Matrix& rho, const Operator& op);  // Tr[op rho]

}  // namespace pjj

#endif
