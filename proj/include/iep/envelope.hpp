#pragma once

#include <map>

#include "iep/coefficients.hpp"
#include "iep/field.hpp"
#include "iep/spectral_ops.hpp"

namespace iep {

enum class EnvelopeRole { A, B, I, J };

// complex slow-scale amplitude on the slow grid (length L_X = eps * L)
struct Envelope {
  PeriodicGrid grid;
  std::vector<cplx> values;
  EnvelopeRole role = EnvelopeRole::A;

  static Envelope zero(const PeriodicGrid& g, EnvelopeRole role);
  static Envelope gaussian(const PeriodicGrid& g, EnvelopeRole role, double amplitude,
                           double width, double center);
  double l2_norm() const;
  double sobolev_norm(int s) const;
};

// One Strang split step of the NLS equation for role A or B:
//   d_theta A = -(i/2) w2 dXX A + i nu1 A|A|^2,
//   d_theta B = +(i/2) w2 dXX B + i nu2 B|B|^2,
// half nonlinear phase / full linear multiplier / half nonlinear.
Envelope nls_step(const Envelope& env, double dtheta, const CoefficientTable& tb);

// NLS right-hand side (used by the exact ansatz time derivative)
std::vector<cplx> nls_rhs(const Envelope& env, const CoefficientTable& tb);

// One step of the inhomogeneous transport equations
//   d_T I - cg dX I = i nu1_tilde A |B|^2,
//   d_T J + cg dX J = i nu2_tilde B |A|^2,
// for lab-frame A, B sampled at the step's start time T; advection is an
// exact Fourier phase, the source uses the midpoint rule with A, B
// advected at -+ cg within the step.
Envelope transport_step(const Envelope& i_or_j, const Envelope& a_lab, const Envelope& b_lab,
                        double dT, const CoefficientTable& tb);

// Closed-form characteristics solution for frozen profiles:
//   h(T, X) = (1 / 2 cg) F+(X + cg T) * Int_{X - cg T}^{X + cg T} (F-)^2.
// The antiderivative is spectral; the zero mode is handled by a direct
// trapezoid integral.
Envelope characteristics_oracle(const Envelope& fp, const Envelope& fm, double T, double cg);

struct SecondOrderFields {
  std::map<int, std::vector<double>> A0, B0;  // real mean-flow fields
  std::map<int, std::vector<cplx>> A2, B2;    // second harmonics
  std::map<int, std::vector<cplx>> f11;       // E^1 F^1 interaction
};

SecondOrderFields second_order_fields(const Envelope& a, const Envelope& b,
                                      const CoefficientTable& tb);

// A, B stored in their comoving frames, I, J in the lab frame; T and
// theta are the slow clocks (theta = eps * T).
struct EnvelopeSystem {
  Envelope A, B, I, J;
  double T = 0.0;
  double theta = 0.0;

  static EnvelopeSystem initial(const PeriodicGrid& slow, double amp_a, double amp_b,
                                double width, double b_offset);

  // advance by a fine-grid time increment dt: transport first with the
  // current (theta-frozen) envelopes, then the NLS step
  void advance(double dt, double eps, const CoefficientTable& tb);

  // lab-frame profiles at the current T
  Envelope a_lab(double cg) const;
  Envelope b_lab(double cg) const;

  double nls_l2_drift() const;  // |‖A‖ - ‖A(0)‖| + |‖B‖ - ‖B(0)‖|

  double a_l2_0 = 0.0, b_l2_0 = 0.0;
};

} // namespace iep
