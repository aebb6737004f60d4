#pragma once

#include <optional>

#include "iep/ansatz.hpp"
#include "iep/config.hpp"

#include "json.hpp"

namespace iep {

using ordered_json = nlohmann::ordered_json;

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  int n_points = 0;
};
FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

struct RunEntry {
  double eps_nominal = 0.0;
  double eps = 0.0;
  double L = 0.0;
  double dt = 0.0;
  double t_max = 0.0;
  std::vector<double> t_stations;
  std::vector<double> err_hs_diag;   // ||U - leading ansatz||_{H^s}, diagonalized
  std::vector<double> err_hs_rhov;   // same in (rho, v)
  std::vector<double> err_l2_rhov;
  double sup_err_hs_diag = 0.0;
  double sup_err_hs_rhov = 0.0;
  double mass_drift = 0.0;
  double energy_drift = 0.0;
  double max_poisson_defect = 0.0;
  double nls_l2_drift = 0.0;
  double growth_exponent = 0.0;      // err vs t on the late stations
  bool completed = true;
  std::string abort_reason;
  double wall_time_s = 0.0;          // excluded from the canonical report

  ordered_json to_json(bool with_timing) const;
};

// one validation run: U(0) = ansatz(0), EP evolved to T0/eps^2, error
// sampled at >= `stations` stations against the leading-order ansatz
RunEntry run_validation(const ExperimentConfig& cfg, double eps_nominal);

struct SweepReport {
  ExperimentConfig cfg;
  std::vector<RunEntry> runs;
  FitResult error_fit;  // log sup_t err_Hs vs log eps
  std::optional<FitResult> residual_fit_leading;
  std::optional<FitResult> residual_fit_second;
  std::vector<std::string> excluded;  // eps of failed runs

  ordered_json to_json(bool with_timing) const;
};

// full sweep with error-exponent fit; also fits both residual exponents
SweepReport sweep_and_fit(const ExperimentConfig& cfg);

struct ResidualSweep {
  std::vector<double> eps;
  std::vector<double> sup_res_l2_leading;
  std::vector<double> sup_res_l2_second;
  FitResult fit_leading;
  FitResult fit_second;
  ordered_json to_json() const;
};

// residual-scaling experiment (envelopes only, no EP evolution)
ResidualSweep residual_experiment(const ExperimentConfig& cfg);

// writes report files; format in {"json", "csv", "plotdata"}; returns the
// list of files written (manifest first for plotdata)
std::vector<std::string> emit(const ordered_json& report, const std::string& format,
                              const std::string& out_dir);

} // namespace iep
