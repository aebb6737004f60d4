#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iep {

struct ExperimentConfig {
  double k0 = 1.0;
  std::vector<double> eps_list = {0.14, 0.10, 0.07};
  double T0 = 0.25;       // slow-time horizon; runs integrate to T0/eps^2
  int N = 8192;           // fine grid modes
  int N_X = 512;          // slow grid modes
  double L_X = 80.0;      // slow domain length target
  double dt = 0.0;        // 0 = choose by CFL
  double cfl = 0.5;
  int sobolev_s = 2;
  std::string ansatz_order = "leading";  // or "second"
  double delta = 0.25;
  double envelope_width = 2.0;
  double amp_a = 1.0;
  double amp_b = 1.0;
  double b_offset = 0.0;  // X_c of the B packet
  int stations = 50;
  std::string output_dir;
  std::uint64_t seed = 0;
  int snapshot_stride = 0;  // 0 = no snapshots

  void validate(bool for_fit) const;  // fits additionally need >= 3 eps, decreasing

  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;
};

// Carrier periodicity forces L = 2 pi M / k0; the nominal eps is snapped
// so that eps * L = L_X holds exactly.
struct GridChoice {
  double eps;     // actual
  double L;       // fine domain length
  int M;          // carrier index, k0 L / (2 pi)
};
GridChoice snap_epsilon(double k0, double L_X, double eps_nominal);

} // namespace iep
