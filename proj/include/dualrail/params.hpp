// params.hpp
// Measured mode constants and unit conventions shared across the toolkit.
//
// Conventions:
//   - angular frequencies (chi, K, Omega, Delta) in rad/us; `mhz(f)` converts
//     an ordinary frequency in MHz to angular units
//   - decay rates (kappa) in 1/ms, thermal occupations dimensionless
//   - round duration in us; fits over detection rounds use t in ms

#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace dualrail {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Ordinary frequency in MHz -> angular frequency in rad/us.
constexpr double mhz(double f) { return two_pi * f; }

// Thrown by file readers/writers; the CLI maps it to its IO exit code.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Mode constants of the Alice/Bob/transmon system. Defaults are the
// measured device values used throughout the test suite.
struct SystemParams {
  double kappa_a = 4.454;          // Alice photon loss, 1/ms
  double kappa_b = 3.339;          // Bob photon loss, 1/ms
  double chi_aq = mhz(-0.514);     // Alice-transmon cross-Kerr, rad/us
  double chi_bq = mhz(-0.251);     // Bob-transmon cross-Kerr, rad/us
  double K_qq = mhz(-251.0);       // transmon self-Kerr (anharmonicity), rad/us
  double n_th_a = 0.0053;          // Alice thermal occupation
  double n_th_b = 0.0086;          // Bob thermal occupation
  double round_duration_us = 12.0; // erasure detection round length

  // kappa_a - kappa_b, 1/ms. Drives the no-jump distortion of superpositions.
  double delta_kappa() const { return kappa_a - kappa_b; }

  void validate() const {
    if (kappa_a <= 0.0 || kappa_b <= 0.0)
      throw std::invalid_argument("SystemParams: kappa_a, kappa_b must be > 0");
    if (n_th_a < 0.0 || n_th_a >= 1.0 || n_th_b < 0.0 || n_th_b >= 1.0)
      throw std::invalid_argument("SystemParams: thermal occupations must be in [0, 1)");
    if (round_duration_us <= 0.0)
      throw std::invalid_argument("SystemParams: round_duration_us must be > 0");
  }
};

} // namespace dualrail
