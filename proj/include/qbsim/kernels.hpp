#pragma once

#include <complex>
#include <cstddef>

// Dense complex inner loops used by the propagator and the observable
// evaluation. A scalar reference implementation always exists; on x86-64 an
// AVX2/FMA variant is compiled as well and selected at runtime when the CPU
// supports it. Equivalence of the two paths is covered by tests/test_kernels.
//
// The environment variable QBSIM_KERNELS=scalar|avx2 overrides the choice.

namespace qbsim::kernels {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

Backend active_backend();
const char* backend_name();
// Test hook; throws if the requested backend was not compiled in / unsupported.
void force_backend(Backend backend);

// y = A x, A row-major dim x dim
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
// y = A† x
void matvec_adjoint(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
// sum_i conj(x_i) y_i
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
double norm_squared(const cplx* x, std::size_t n);
// sum_i d_i |x_i|^2  (expectation of a real diagonal operator)
double weighted_norm_squared(const double* d, const cplx* x, std::size_t n);
// x_i *= a_i (elementwise complex product; phase application)
void hadamard_inplace(const cplx* a, cplx* x, std::size_t n);

namespace scalar {
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
void matvec_adjoint(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
double norm_squared(const cplx* x, std::size_t n);
double weighted_norm_squared(const double* d, const cplx* x, std::size_t n);
void hadamard_inplace(const cplx* a, cplx* x, std::size_t n);
} // namespace scalar

#if defined(QBSIM_BUILD_AVX2)
namespace avx2 {
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
void matvec_adjoint(const cplx* a, const cplx* x, cplx* y, std::size_t dim);
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
double norm_squared(const cplx* x, std::size_t n);
double weighted_norm_squared(const double* d, const cplx* x, std::size_t n);
void hadamard_inplace(const cplx* a, cplx* x, std::size_t n);
} // namespace avx2
#endif

} // namespace qbsim::kernels
