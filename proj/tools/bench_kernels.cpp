// Timing comparison of the banded Liouvillian kernel (serial and OpenMP)
// against the dense reference, plus one RK4 step, at a few cutoffs.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pjj/liouvillian.hpp"

using namespace pjj;

namespace {

Matrix random_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = cplx(u(rng), u(rng));
    return m;
}

template <class F>
double time_per_call_ms(F&& f, int reps) {
    f();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < reps; ++k) f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    SystemParams params;
    const cplx a_l(3.1, -1.2), a_r(-2.5, 0.4);

#ifdef _OPENMP
    std::printf("omp max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("%6s %10s %14s %14s %14s %12s\n", "n_max", "dim", "banded[ms]", "banded_omp[ms]",
                "dense[ms]", "rk4step[ms]");

    for (int n_max : {8, 12, 16, 20}) {
        const FockCutoff cutoff{n_max};
        const int dim = cutoff.composite_dim();
        LiouvillianKernel kern(params, cutoff, false);
        kern.set_meanfield(a_l, a_r);
        const Matrix rho = random_matrix(dim, 42);
        Matrix out(dim, dim);

        const double t_serial =
            time_per_call_ms([&] { kern.apply(rho.data(), out.data(), false); }, 50);
        const double t_par =
            time_per_call_ms([&] { kern.apply(rho.data(), out.data(), true); }, 50);

        const Operator h = fluctuation_hamiltonian(a_l, a_r, params, cutoff, false);
        Matrix ref;
        const double t_dense = time_per_call_ms(
            [&] { ref = apply_liouvillian_reference(h, rho, params, cutoff); }, 5);

        MeanFieldTrajectory mf;
        mf.t_start = 0.0;
        mf.dt = 1.0;
        mf.states = {{a_l, a_r}, {a_l, a_r}};
        mf.drives = {{0, 0}, {0, 0}};
        LindbladPropagator prop(params, cutoff, false, &mf, true);
        Matrix x = rho;
        const double t_step = time_per_call_ms([&] { prop.step(x, 0.0, 0.004); }, 20);

        const double max_dev = (out - ref).cwiseAbs().maxCoeff();
        std::printf("%6d %10d %14.4f %14.4f %14.4f %12.4f   max|banded-dense|=%.3e\n", n_max, dim,
                    t_serial, t_par, t_dense, t_step, max_dev);
    }
    return 0;
}
