#pragma once

#include <map>
#include <string>

#include "iep/dispersion.hpp"

namespace iep {

// Quadratic interaction kernel of the diagonalized system,
//   alpha^j_{mn}(k, k-l, l) = n (k/2) qh(l)
//     + (j k / (4 qh(k))) [ m n qh(k-l) qh(l) - 1 - 1/(<k>^2 <k-l>^2 <l>^2) ],
// with <k>^2 = 1 + k^2. Slots are named (output k, first factor kl = k-l,
// second factor l); unit tests pin the convention.
double alpha(int j, int m, int n, double k, double kl, double l);

// symmetrized pair alpha_{mn}(k,a,b) + alpha_{nm}(k,b,a); the convolution
// produces exactly this sum for an (unordered) product of two distinct
// spectral pieces
double alpha_pair(int j, int m, int n, double k, double a, double b);

// analytic d/dk of alpha in its first slot, other slots fixed
double dk_alpha(int j, int m, int n, double at_k, double kl, double l);

// Cubic kernel as printed in the source system display,
//   beta^j(k, k-l, l-s, s) = -(j k / (6 qh(k))) [ (2-k^2) /
//       (2 <k>^2 <k-l>^2 <l-s>^2 <s>^2) - 1 ],
// independent of the component indices m, n, p.
double beta(int j, double k, double kl, double ls, double s);

// Cubic coefficient of the exact nonlinearity (pressure log term plus the
// exact Poisson expansion) acting on three carrier modes at (k0, k0, -k0):
// the coefficient multiplying A|A|^2 in the U_{+1} equation is
// (k0 / (2 qh(k0))) * cubic_self_bracket(k0), and the A|B|^2 cross
// coefficient is exactly twice it.
double cubic_self_bracket(double k0);

struct CoefficientTable {
  double k0 = 0.0;
  double omega0 = 0.0;
  double cg = 0.0;
  double omega2 = 0.0;
  std::map<int, double> gamma_A2, gamma_B2;   // A2_j = gamma * A^2, etc.
  std::map<int, double> gamma_A0, gamma_B0;   // A0_j = gamma * |A|^2
  std::map<int, double> gamma_f11;            // f11_j = gamma * A * B
  double nu1 = 0.0, nu2 = 0.0;                // NLS cubic coefficients
  double nu1_tilde = 0.0, nu2_tilde = 0.0;    // transport source coefficients

  std::string to_json() const;
};

// Assembles every corrector coefficient and the NLS/transport
// coefficients from kernel evaluations. Throws std::invalid_argument if
// any nonresonance margin is below 1e-8 (naming the failing margin).
CoefficientTable coefficient_table(double k0);

} // namespace iep
