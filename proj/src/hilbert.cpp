#include "pjj/hilbert.hpp"

#include <cmath>

namespace pjj {

Operator identity_op(int dim) { return Matrix::Identity(dim, dim); }

Operator annihilation(FockCutoff cutoff) {
    cutoff.validate();
    const int d = cutoff.mode_dim();
    Matrix a = Matrix::Zero(d, d);
    for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Operator creation(FockCutoff cutoff) { return annihilation(cutoff).adjoint(); }

Operator number_op(FockCutoff cutoff) {
    cutoff.validate();
    const int d = cutoff.mode_dim();
    Matrix n = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = double(k);
    return n;
}

Operator tensor(const Operator& a, const Operator& b) {
    const int ra = int(a.rows()), ca = int(a.cols());
    const int rb = int(b.rows()), cb = int(b.cols());
    Matrix out(ra * rb, ca * cb);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

Operator embed(const Operator& op, Mode which, FockCutoff cutoff) {
    const int d = cutoff.mode_dim();
    if (op.rows() != d || op.cols() != d)
        throw DimensionMismatch("embed: operator does not live on the single-mode space");
    const Matrix id = identity_op(d);
    return which == Mode::L ? tensor(op, id) : tensor(id, op);
}

// exp(A) for anti-Hermitian A, via the Hermitian eigenproblem of -iA.
static Matrix exp_antihermitian(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(cplx(0, -1) * a);
    const auto& lam = es.eigenvalues();
    Vector phases(lam.size());
    for (int k = 0; k < lam.size(); ++k) phases(k) = std::exp(kImag * lam(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator displacement(cplx alpha, FockCutoff cutoff) {
    const Matrix a = annihilation(cutoff);
    return exp_antihermitian(alpha * a.adjoint() - std::conj(alpha) * a);
}

Operator squeeze(cplx xi, FockCutoff cutoff) {
    const Matrix a = annihilation(cutoff);
    const Matrix a2 = a * a;
    return exp_antihermitian(0.5 * (std::conj(xi) * a2 - xi * a2.adjoint()));
}

double coherent_tail_mass(cplx alpha, FockCutoff cutoff) {
    const double nbar = std::norm(alpha);
    double term = std::exp(-nbar);  // p(0)
    double kept = term;
    for (int n = 1; n <= cutoff.n_max; ++n) {
        term *= nbar / n;
        kept += term;
    }
    return std::max(0.0, 1.0 - kept);
}

double squeezed_tail_mass(double r, FockCutoff cutoff) {
    // |<2k|S(r)|0>|^2 = (2k)! tanh^{2k}(r) / (4^k (k!)^2 cosh r)
    const double t2 = std::tanh(r) * std::tanh(r);
    double term = 1.0 / std::cosh(r);  // p(0)
    double kept = term;
    for (int k = 1; 2 * k <= cutoff.n_max; ++k) {
        term *= t2 * (2.0 * k - 1.0) / (2.0 * k);
        kept += term;
    }
    return std::max(0.0, 1.0 - kept);
}

StateVector fock_state(int n, FockCutoff cutoff) {
    if (n < 0 || n > cutoff.n_max) throw DomainError("fock_state: level outside cutoff");
    Vector psi = Vector::Zero(cutoff.mode_dim());
    psi(n) = 1.0;
    return psi;
}

StateVector coherent_state(cplx alpha, FockCutoff cutoff) {
    const int d = cutoff.mode_dim();
    Vector psi(d);
    psi(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < d; ++n) psi(n) = psi(n - 1) * alpha / std::sqrt(double(n));
    psi.normalize();
    return psi;
}

StateVector squeezed_coherent_state(cplx alpha, cplx xi, FockCutoff cutoff) {
    Vector psi = squeeze(xi, cutoff).col(0);  // S|0>
    psi = displacement(alpha, cutoff) * psi;
    psi.normalize();
    return psi;
}

cplx expectation(const StateVector& psi, const Operator& op) {
    if (psi.size() != op.rows() || op.rows() != op.cols())
        throw DimensionMismatch("expectation: state/operator dimensions differ");
    return psi.dot(op * psi);  // Eigen dot conjugates the left argument
}

cplx expectation(const Matrix& rho, const Operator& op) {
    if (rho.rows() != op.rows() || rho.cols() != op.cols() || rho.rows() != rho.cols())
        throw DimensionMismatch("expectation: density matrix/operator dimensions differ");
    return (op * rho).trace();
}

}  // namespace pjj
