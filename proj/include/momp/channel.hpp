// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "momp/tensor.hpp"

namespace momp {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Physical description of one antenna array. Positions are relative to the
// array centroid; per-antenna complex gains are split into amplitude and
// phase. `coupling` is the mutual-coupling coefficient between adjacent
// elements (tridiagonal model); it is applied at the dictionary/channel
// level, not inside steering_vector.
struct ArrayParams {
  std::vector<Eigen::Vector3d> positions;  // meters
  Eigen::VectorXd gain_amplitudes;
  Eigen::VectorXd gain_phases;  // radians
  Complex coupling = {0.0, 0.0};
  double wavelength = 0.0;  // meters

  int size() const { return static_cast<int>(positions.size()); }
  void validate() const;
};

struct SubcarrierParams {
  Eigen::VectorXd frequencies;  // Hz, strictly increasing
  double spacing = 0.0;         // Hz
  double ppm_offset = 0.0;      // oscillator offset, applied per subcarrier index

  int size() const { return static_cast<int>(frequencies.size()); }
  void validate() const;
};

// K propagation paths.
struct PathSet {
  Eigen::VectorXd aoa;    // radians, [0, pi]
  Eigen::VectorXd aod;    // radians, [0, pi]
  Eigen::VectorXd delay;  // seconds, >= 0
  Eigen::VectorXcd gain;

  int size() const { return static_cast<int>(gain.size()); }
  void validate() const;
};

// Uniform-law spreads for the impairment sampler, plus the fixed true
// coupling coefficient and oscillator offset.
struct ImpairmentSpreads {
  double delta_p = 0.0;        // BS position spread, fraction of wavelength
  double delta_q = 0.0;        // MS position spread, fraction of wavelength
  double delta_a = 0.0;        // BS gain amplitude spread
  double delta_a_prime = 0.0;  // MS gain amplitude spread
  double delta_phi_b = 0.0;    // BS gain phase spread, radians
  double delta_phi_m = 0.0;    // MS gain phase spread, radians
  Complex coupling_true = {0.0, 0.0};
  double ppm = 0.0;

  void validate() const;
};

struct SystemRealization {
  ArrayParams bs;
  std::vector<ArrayParams> ms;
  SubcarrierParams sub;
};

struct NoisyObservation {
  Tensor3 y;
  double sigma2 = 0.0;
};

// Unit propagation direction for an azimuth angle in [0, pi]:
// u(phi) = (sin phi, cos phi, 0), so that a ULA along the y-axis sees
// p^T u = y * cos(phi).
Eigen::Vector3d unit_direction(double angle);

// Per-antenna array response g_i * exp(-j 2 pi / lambda * p_i^T u(angle)).
// Coupling is not applied here.
Eigen::VectorXcd steering_vector(const ArrayParams& array, double angle);

// Per-subcarrier path response exp(-j 2 pi f_i delay).
Eigen::VectorXcd frequency_response(const SubcarrierParams& sub, double delay);

// Tridiagonal mutual-coupling matrix with unit diagonal and c1 on the first
// sub/super-diagonals. Requires |c1| < 1.
Eigen::MatrixXcd coupling_matrix(Complex c1, int n);

// Sum over paths of gain_k * (C_bs e_bs(aoa_k)) o (C_ms e_ms(aod_k)) o e_f(delay_k),
// as a (N_bs, N_ms, N_sc) tensor. The vectorized view equals the matching
// Kronecker-product sum.
Tensor3 synthesize_channel(const ArrayParams& bs, const ArrayParams& ms,
                           const SubcarrierParams& sub, const PathSet& paths);

// Draws one impaired realization of the whole system. Position noise moves
// only the y-coordinates (uniform, scaled by wavelength); amplitudes get
// U(-delta, 0); phases U(-delta, delta); subcarrier i is offset by
// i * ppm * spacing (1-based i). Each MS gets an independent draw.
// Deterministic given the seed.
SystemRealization sample_impairments(const ArrayParams& nominal_bs,
                                     const std::vector<ArrayParams>& nominal_ms,
                                     const SubcarrierParams& nominal_sub,
                                     const ImpairmentSpreads& spreads,
                                     std::uint64_t seed);

// Adds i.i.d. circularly-symmetric complex Gaussian noise at the requested
// SNR: sigma^2 = |H|_F^2 / (N 10^(snr/10)) with N the element count.
// snr_db = +infinity returns the channel untouched with sigma2 = 0.
NoisyObservation add_noise(const Tensor3& h, double snr_db, std::uint64_t seed);

// Impairment-free builders used throughout the experiments: unit gains, zero
// phases, half-wavelength spacing along y centered at the centroid; pilot
// subcarriers centered on the carrier.
ArrayParams make_nominal_ula(int n, double wavelength);
SubcarrierParams make_nominal_subcarriers(int n, double carrier_hz, double spacing_hz);

}  // namespace momp
