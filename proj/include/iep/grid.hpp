#pragma once

#include <memory>
#include <vector>

namespace iep {

// Uniform periodic grid on [0, L). Wavenumbers are 2*pi*j/L for
// j in {-N/2, ..., N/2-1}, stored in FFT bin order.
class PeriodicGrid {
public:
  PeriodicGrid() = default;
  PeriodicGrid(double length, int n_modes);

  double length() const { return length_; }
  int n_modes() const { return n_; }
  double dx() const { return length_ / n_; }
  double x(int i) const { return length_ * i / n_; }
  double nyquist() const;

  // wavenumber of FFT bin i
  double k(int i) const { return (*wavenumbers_)[i]; }
  const std::vector<double>& wavenumbers() const { return *wavenumbers_; }

  bool operator==(const PeriodicGrid& o) const {
    return length_ == o.length_ && n_ == o.n_;
  }
  bool operator!=(const PeriodicGrid& o) const { return !(*this == o); }

private:
  double length_ = 0.0;
  int n_ = 0;
  std::shared_ptr<const std::vector<double>> wavenumbers_;
};

} // namespace iep
