#pragma once

#include <string>
#include <utility>
#include <vector>

namespace iep {

// omega(k) = k * sqrt((2+k^2)/(1+k^2)) and friends
double q_hat(double k);
double omega(double k);
// analytic derivative, order in {1,2,3}
double omega_deriv(double k, int order);

struct DispersionReport {
  double k0 = 0.0;
  double omega0 = 0.0;
  double cg = 0.0;      // omega'(k0)
  double omega2 = 0.0;  // omega''(k0)
  double omega3 = 0.0;  // omega'''(k0)
  std::vector<std::pair<std::string, double>> nonresonance_margins;
  std::vector<std::string> flagged;  // margins with |value| < 1e-8

  double margin(const std::string& label) const;
  std::string to_json() const;
};

// Evaluates every denominator the formal derivation divides by:
//   2*omega0 -+ omega(2 k0), 3*omega0 -+ omega(3 k0),
//   (j1-j2)*omega0 - j*omega((j1+j2) k0) for j,j1,j2 in {+-1},
//   cg -+ omega'(0).
// Throws std::invalid_argument for k0 <= 0.
DispersionReport nonresonance_report(double k0);

} // namespace iep
