#pragma once

#include <array>
#include <string>
#include <vector>

#include "iep/field.hpp"

namespace iep {

// theta_hat(k) = 1 for |k| > delta, eps + (1-eps)|k|/delta otherwise
struct WeightFunction {
  double delta;
  double epsilon;
  double operator()(double k) const;
  double theta0(double k) const;  // theta_hat - eps, vanishes at k = 0
};

// sharp low/high frequency splitting at |k| = delta
struct Projectors {
  double delta;
  double p0(double k) const { return std::abs(k) <= delta ? 1.0 : 0.0; }
  double p1(double k) const { return 1.0 - p0(k); }
};

// quadratic symbol of the error equation,
//   zeta^{+-}_{j,p}(k, k-m, m) = p qh(m) +- qh(k-m) +- (j p / qh(k)) qh(k-m) qh(m)
//                                - j/qh(k) - (j/qh(k)) / (<k>^2 <k-m>^2 <m>^2)
double zeta(int j, int p, int sign, double k, double km, double m);

// low-frequency transformation kernel
//   b^{0,1,+-} = P0(k) k zeta / (j w(k) -+ w(k-m) - p w(m)) * theta(m) / (2 theta(k));
// returns 0 at k = 0 (trivial resonance cancelled by the k factor) and 0
// outside the support region |k| <= delta, | |k-m| - k0 | <= delta.
double kernel_b01(int j, int p, int sign, double k, double km, double m,
                  const WeightFunction& w, const Projectors& proj, double k0);

// kernel with the nontrivial k = k0 resonance offset by theta0,
//   b^{1,0,+-,c} = P1(k) k zeta(k, c k0, k - c k0)
//       / (j w(k) -+ w(c k0) - p w(k - c k0)) * theta0(k - c k0) / (2 theta(k))
double kernel_b10(int j, int p, int sign, int carrier, double k, const WeightFunction& w,
                  const Projectors& proj, double k0);

// high-frequency kernel b^{1,1,+-} = (1/2) k zeta / (j w(k) -+ w(k-m) - p w(m))
double kernel_b11(int j, int p, int sign, double k, double km, double m);

struct B11Asymptotics {
  int j, p, sign;
  std::vector<double> k_samples;
  std::vector<double> values;
  double fitted_exponent_vs_stated;   // fit of |b - stated limit|
  double fitted_exponent_vs_half;     // fit of |b - (stated limit)/2|, j = -p only
  double stated_limit_tail;           // stated limit at the largest k (j=-p: -1)
};

// Decay-rate report along km = k0 at k in {25, 50, 100, 200}. The stated
// limits are +-qh(k0) k / (j k0 -+ w(k0)) for j = p and -1 for j = -p.
B11Asymptotics b11_asymptotics_check(int j, int p, int sign, double k0);

struct KernelScanRow {
  double k, km, m, value, bound_product;
};

// deterministic scans used by the kernels CLI and the acceptance suite
std::vector<KernelScanRow> scan_b01(double k0, double delta, double eps, int n, int j, int p,
                                    int sign);
double scan_b01_max_bound(double k0, double delta, double eps, int n = 200);
std::vector<KernelScanRow> scan_b10(double k0, double delta, double eps, int n, int j, int p,
                                    int sign);
std::vector<KernelScanRow> scan_b11(double k0, double delta, int n, int j, int p, int sign);
std::string scan_csv(const std::vector<KernelScanRow>& rows);

// Modified energy E_s = sum_l [ 1/2 ||dx^l R0||^2 + 1/2 ||dx^l R1||^2
//   + eps * cross terms through B^{1,1} ]; psi_c and phi_c are the
// carrier-localized packets. Dense double-sum kernel application;
// throws std::invalid_argument for grids finer than 512 modes.
double energy_functional(const std::array<ComplexField, 2>& r1,
                         const std::array<ComplexField, 2>& r0, const ComplexField& psi_c,
                         const ComplexField& phi_c, int s, double eps, double k0, double delta);

// plain seminorm sum  sum_l sum_j ( ||dx^l R0_j||^2 + ||dx^l R1_j||^2 )
double seminorm_sum(const std::array<ComplexField, 2>& r1, const std::array<ComplexField, 2>& r0,
                    int s);

} // namespace iep
