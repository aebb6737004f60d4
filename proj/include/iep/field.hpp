#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "iep/fft.hpp"
#include "iep/grid.hpp"

namespace iep {

class RealField;

class ComplexField {
public:
  ComplexField() = default;
  ComplexField(PeriodicGrid grid, std::vector<cplx> values);
  static ComplexField zero(const PeriodicGrid& grid);
  static ComplexField from_spectrum(const PeriodicGrid& grid, std::vector<cplx> spectrum);

  const PeriodicGrid& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }
  const std::vector<cplx>& spectrum() const;

  ComplexField conj() const;

private:
  PeriodicGrid grid_;
  std::vector<cplx> values_;
  mutable std::shared_ptr<const std::vector<cplx>> spectrum_;
};

class RealField {
public:
  RealField() = default;
  RealField(PeriodicGrid grid, std::vector<double> values);
  static RealField zero(const PeriodicGrid& grid);
  // inverse transform of a conjugate-symmetric spectrum; throws if the
  // imaginary residue exceeds reality_tol * field norm
  static RealField from_spectrum(const PeriodicGrid& grid, const std::vector<cplx>& spectrum,
                                 double reality_tol = 1e-10);

  const PeriodicGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<cplx>& spectrum() const;

  ComplexField as_complex() const;

private:
  PeriodicGrid grid_;
  std::vector<double> values_;
  mutable std::shared_ptr<const std::vector<cplx>> spectrum_;
};

// --- Fourier multiplier operators -------------------------------------
using Multiplier = std::function<cplx(double)>;

// Applies m(k) mode by mode. Throws std::domain_error (reporting the
// offending k) if m is non-finite at any grid wavenumber. The RealField
// overload requires m to produce a real result and enforces it.
ComplexField apply_multiplier(const ComplexField& f, const Multiplier& m);
RealField apply_multiplier(const RealField& f, const Multiplier& m);

// d/dx with the Nyquist mode zeroed
RealField derivative(const RealField& f);
ComplexField derivative(const ComplexField& f);

// discrete H^s norm: sqrt( L * sum |u_hat(k)|^2 (1+k^2)^s ); equals the
// continuum L^2 norm of the sampled function at s = 0
double sobolev_norm(const RealField& f, int s);
double sobolev_norm(const ComplexField& f, int s);

double l2_norm(const RealField& f);
double linf_norm(const RealField& f);
double linf_norm(const ComplexField& f);

// 2/3-rule: zero all modes with |k| > (2/3) k_max (Nyquist included)
RealField dealias(const RealField& f);
ComplexField dealias(const ComplexField& f);

} // namespace iep
