#pragma once

#include <stdexcept>

#include "iep/field.hpp"

namespace iep {

struct PoissonConfig {
  double tol = 1e-12;   // L-inf defect target
  int max_iter = 100;
};

struct PoissonError : std::runtime_error {
  PoissonError(const std::string& what, double defect)
      : std::runtime_error(what), last_defect(defect) {}
  double last_defect;
};

// Solves dxx phi = e^phi - 1 - rho by the fixed point
//   phi_{m+1} = (1 - dxx)^{-1} (rho + phi_m + 1 - e^{phi_m}),
// phi_0 = (1 - dxx)^{-1} rho. Throws PoissonError on non-convergence or
// when the defect grows five iterations in a row.
RealField solve_poisson(const RealField& rho, const PoissonConfig& cfg = {});

// three-term inverse expansion (linear, quadratic, cubic response of the
// exact solve); the gap to solve_poisson scales as amplitude^4
RealField poisson_series3(const RealField& rho);

// complex-valued internals, shared with the time stepper
std::vector<cplx> solve_poisson_values(const PeriodicGrid& g, const std::vector<cplx>& rho,
                                       const PoissonConfig& cfg,
                                       const std::vector<cplx>* warm_start = nullptr,
                                       double* defect_out = nullptr);

} // namespace iep
