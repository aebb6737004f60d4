#pragma once

#include <map>

#include "iep/envelope.hpp"
#include "iep/ep_solver.hpp"

namespace iep {

enum class AnsatzOrder { Leading, Second };

struct AnsatzConfig {
  double epsilon = 0.1;
  double k0 = 1.0;
  AnsatzOrder order = AnsatzOrder::Leading;
  CoefficientTable table;
  PeriodicGrid fine;   // x grid, length L with k0*L/(2 pi) integer
  PeriodicGrid slow;   // X grid, length L_X = eps * L

  int carrier_index() const;  // k0 L / (2 pi)
  void validate() const;      // throws on broken invariants
};

// Bidirectional wave-packet approximation at time t, mapped to (rho, v).
// Order Leading assembles the two carrier-envelope packets; Second adds
// the mean-flow, second-harmonic and interaction correctors.
EPState assemble(const AnsatzConfig& cfg, const EnvelopeSystem& env, double t);

// Exact d/dt of the assembled fields from the envelope evolution laws
// (carrier rotation, advection, NLS and transport right-hand sides).
std::pair<RealField, RealField> ansatz_time_derivative(const AnsatzConfig& cfg,
                                                       const EnvelopeSystem& env, double t);

struct ResidualResult {
  RealField res_rho;
  RealField res_v;
  std::map<int, double> norms;  // s -> H^s norm of the (res_rho, res_v) pair
};

// Residual of the full system at the ansatz:
//   res_rho = -d_t rho - dx v - dx(rho v),
//   res_v   = -d_t v - v dx v - dx rho/(1+rho) - dx phi(rho),
// with the exact Poisson solve.
ResidualResult residual(const AnsatzConfig& cfg, const EnvelopeSystem& env, double t,
                        const PoissonConfig& pcfg = {});

} // namespace iep
