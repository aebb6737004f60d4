#pragma once

#include <complex>
#include <vector>

namespace iep {

using cplx = std::complex<double>;

// Forward transform carries the 1/N factor, so coefficients are Fourier
// series coefficients of the sampled function. Plans are cached per
// thread; the FFTW planner itself is guarded by a global mutex.
void fft_forward(const std::vector<cplx>& in, std::vector<cplx>& out);
void fft_inverse(const std::vector<cplx>& in, std::vector<cplx>& out);

std::vector<cplx> fft_forward(const std::vector<cplx>& in);
std::vector<cplx> fft_inverse(const std::vector<cplx>& in);

} // namespace iep
