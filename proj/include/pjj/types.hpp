#ifndef PJJ_TYPES_HPP
#define PJJ_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pjj {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// hbar in meV*ps; energies are meV, times are ps throughout.
inline constexpr double kHbar = 0.6582119569;

inline constexpr cplx kImag{0.0, 1.0};

enum class Mode { L, R };

inline const char* mode_name(Mode m) { return m == Mode::L ? "L" : "R"; }

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PositivityLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckpointMissing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PropagationDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pjj

#endif
