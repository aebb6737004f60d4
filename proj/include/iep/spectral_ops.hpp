#pragma once

// Value-level spectral helpers shared by the solvers. These operate on
// raw complex vectors (physical samples or FFT-ordered spectra) next to
// a PeriodicGrid, which keeps the inner loops allocation-light.

#include <vector>

#include "iep/field.hpp"

namespace iep::ops {

// spectrum of f, 1/N convention
std::vector<cplx> to_spectrum(const std::vector<cplx>& values);
std::vector<cplx> to_values(const std::vector<cplx>& spectrum);

// d/dx in place on a spectrum (Nyquist zeroed)
void derivative_spectrum(const PeriodicGrid& g, std::vector<cplx>& spec);

std::vector<cplx> derivative_values(const PeriodicGrid& g, const std::vector<cplx>& values);

// multiply spectrum by m(k)
void multiply_spectrum(const PeriodicGrid& g, std::vector<cplx>& spec,
                       const std::function<cplx(double)>& m);

// zero modes with |k| > (2/3) k_max, Nyquist included (in place, spectrum)
void dealias_spectrum(const PeriodicGrid& g, std::vector<cplx>& spec);
std::vector<cplx> dealias_values(const PeriodicGrid& g, const std::vector<cplx>& values);

// f(x) -> f(x + s): spectrum gains e^{i k s}
std::vector<cplx> shift_values(const PeriodicGrid& g, const std::vector<cplx>& values, double s);

// spectral zero-padding interpolation from a coarse grid onto a fine one
// with fine.n_modes >= coarse.n_modes; exact for band-limited data
std::vector<cplx> upsample_spectrum(const PeriodicGrid& coarse, const std::vector<cplx>& coarse_spec,
                                    const PeriodicGrid& fine);

double max_abs(const std::vector<cplx>& v);
double max_abs_imag(const std::vector<cplx>& v);

} // namespace iep::ops
