// SPDX-License-Identifier: Apache-2.0
#include "momp/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "momp/rng.hpp"

namespace momp {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void ArrayParams::validate() const {
  const auto n = positions.size();
  if (n < 1) throw std::invalid_argument("ArrayParams: need at least one antenna");
  if (gain_amplitudes.size() != static_cast<Eigen::Index>(n) ||
      gain_phases.size() != static_cast<Eigen::Index>(n))
    throw std::invalid_argument("ArrayParams: gain vectors must match position count");
  if ((gain_amplitudes.array() < 0.0).any())
    throw std::invalid_argument("ArrayParams: gain amplitudes must be non-negative");
  if (std::abs(coupling) >= 1.0)
    throw std::invalid_argument("ArrayParams: |coupling| must be < 1");
  if (!(wavelength > 0.0))
    throw std::invalid_argument("ArrayParams: wavelength must be positive");
}

void SubcarrierParams::validate() const {
  if (frequencies.size() < 1)
    throw std::invalid_argument("SubcarrierParams: need at least one subcarrier");
  for (Eigen::Index i = 0; i + 1 < frequencies.size(); ++i)
    if (!(frequencies[i] < frequencies[i + 1]))
      throw std::invalid_argument("SubcarrierParams: frequencies must be strictly increasing");
  if ((frequencies.array() <= 0.0).any())
    throw std::invalid_argument("SubcarrierParams: frequencies must be positive");
}

void PathSet::validate() const {
  const Eigen::Index k = gain.size();
  if (aoa.size() != k || aod.size() != k || delay.size() != k)
    throw std::invalid_argument("PathSet: all fields must have equal length");
  for (Eigen::Index i = 0; i < k; ++i) {
    if (aoa[i] < 0.0 || aoa[i] > M_PI || aod[i] < 0.0 || aod[i] > M_PI)
      throw std::invalid_argument("PathSet: angles must lie in [0, pi]");
    if (delay[i] < 0.0) throw std::invalid_argument("PathSet: delays must be non-negative");
  }
}

void ImpairmentSpreads::validate() const {
  if (delta_p < 0 || delta_q < 0 || delta_a < 0 || delta_a_prime < 0 ||
      delta_phi_b < 0 || delta_phi_m < 0)
    throw std::invalid_argument("ImpairmentSpreads: spreads must be non-negative");
  if (std::abs(coupling_true) >= 1.0)
    throw std::invalid_argument("ImpairmentSpreads: |coupling_true| must be < 1");
}

Eigen::Vector3d unit_direction(double angle) {
  if (!(angle >= 0.0 && angle <= M_PI))
    throw std::domain_error("unit_direction: angle must lie in [0, pi]");
  return {std::sin(angle), std::cos(angle), 0.0};
}

Eigen::VectorXcd steering_vector(const ArrayParams& array, double angle) {
  const Eigen::Vector3d u = unit_direction(angle);
  const double wavenumber = kTwoPi / array.wavelength;
  const int n = array.size();
  Eigen::VectorXcd e(n);
  for (int i = 0; i < n; ++i) {
    const double phase = array.gain_phases[i] - wavenumber * array.positions[i].dot(u);
    e[i] = array.gain_amplitudes[i] * std::polar(1.0, phase);
  }
  return e;
}

Eigen::VectorXcd frequency_response(const SubcarrierParams& sub, double delay) {
  if (delay < 0.0) throw std::domain_error("frequency_response: delay must be non-negative");
  const int n = sub.size();
  Eigen::VectorXcd e(n);
  for (int i = 0; i < n; ++i) e[i] = std::polar(1.0, -kTwoPi * sub.frequencies[i] * delay);
  return e;
}

Eigen::MatrixXcd coupling_matrix(Complex c1, int n) {
  if (std::abs(c1) >= 1.0) throw std::domain_error("coupling_matrix: |c1| must be < 1");
  if (n < 1) throw std::domain_error("coupling_matrix: n must be >= 1");
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    c(i, i + 1) = c1;
    c(i + 1, i) = c1;
  }
  return c;
}

Tensor3 synthesize_channel(const ArrayParams& bs, const ArrayParams& ms,
                           const SubcarrierParams& sub, const PathSet& paths) {
  bs.validate();
  ms.validate();
  sub.validate();
  paths.validate();

  const Eigen::MatrixXcd c_bs = coupling_matrix(bs.coupling, bs.size());
  const Eigen::MatrixXcd c_ms = coupling_matrix(ms.coupling, ms.size());

  Tensor3 h(bs.size(), ms.size(), sub.size());
  for (int k = 0; k < paths.size(); ++k) {
    const Eigen::VectorXcd e_bs = c_bs * steering_vector(bs, paths.aoa[k]);
    const Eigen::VectorXcd e_ms = c_ms * steering_vector(ms, paths.aod[k]);
    const Eigen::VectorXcd e_f = frequency_response(sub, paths.delay[k]);
    h.vec() += paths.gain[k] * kron3(e_bs, e_ms, e_f);
  }
  return h;
}

namespace {

void perturb_array(ArrayParams& a, double delta_pos, double delta_amp,
                   double delta_phase, Rng& rng) {
  for (auto& p : a.positions)
    p.y() += a.wavelength * rng.uniform(-delta_pos, delta_pos);
  for (Eigen::Index i = 0; i < a.gain_amplitudes.size(); ++i)
    a.gain_amplitudes[i] += rng.uniform(-delta_amp, 0.0);
  for (Eigen::Index i = 0; i < a.gain_phases.size(); ++i)
    a.gain_phases[i] += rng.uniform(-delta_phase, delta_phase);
}

}  // namespace

SystemRealization sample_impairments(const ArrayParams& nominal_bs,
                                     const std::vector<ArrayParams>& nominal_ms,
                                     const SubcarrierParams& nominal_sub,
                                     const ImpairmentSpreads& spreads,
                                     std::uint64_t seed) {
  spreads.validate();

  SystemRealization out;
  out.bs = nominal_bs;
  {
    Rng rng(derive_seed(seed, 0));
    perturb_array(out.bs, spreads.delta_p, spreads.delta_a, spreads.delta_phi_b, rng);
  }
  out.bs.coupling = spreads.coupling_true;

  out.ms.reserve(nominal_ms.size());
  for (std::size_t m = 0; m < nominal_ms.size(); ++m) {
    ArrayParams a = nominal_ms[m];
    Rng rng(derive_seed(seed, 1 + m));
    perturb_array(a, spreads.delta_q, spreads.delta_a_prime, spreads.delta_phi_m, rng);
    out.ms.push_back(std::move(a));
  }

  out.sub = nominal_sub;
  out.sub.ppm_offset = spreads.ppm;
  for (Eigen::Index i = 0; i < out.sub.frequencies.size(); ++i)
    out.sub.frequencies[i] += static_cast<double>(i + 1) * spreads.ppm * out.sub.spacing;

  return out;
}

NoisyObservation add_noise(const Tensor3& h, double snr_db, std::uint64_t seed) {
  NoisyObservation out;
  out.y = h;
  if (std::isinf(snr_db) && snr_db > 0) {
    out.sigma2 = 0.0;
    return out;
  }
  const double power = h.squared_norm();
  if (power == 0.0)
    throw std::domain_error("add_noise: zero channel with finite SNR");
  const double n_elems = static_cast<double>(h.size());
  out.sigma2 = power / (n_elems * std::pow(10.0, snr_db / 10.0));

  Rng rng(seed);
  for (Eigen::Index i = 0; i < out.y.vec().size(); ++i)
    out.y.vec()[i] += rng.complex_normal(out.sigma2);
  return out;
}

ArrayParams make_nominal_ula(int n, double wavelength) {
  ArrayParams a;
  a.wavelength = wavelength;
  a.positions.resize(n);
  for (int i = 0; i < n; ++i) {
    const double y = (i - 0.5 * (n - 1)) * 0.5 * wavelength;
    a.positions[i] = {0.0, y, 0.0};
  }
  a.gain_amplitudes = Eigen::VectorXd::Ones(n);
  a.gain_phases = Eigen::VectorXd::Zero(n);
  a.coupling = {0.0, 0.0};
  return a;
}

SubcarrierParams make_nominal_subcarriers(int n, double carrier_hz, double spacing_hz) {
  SubcarrierParams s;
  s.spacing = spacing_hz;
  s.ppm_offset = 0.0;
  s.frequencies.resize(n);
  for (int i = 0; i < n; ++i)
    s.frequencies[i] = carrier_hz + (i - 0.5 * (n - 1)) * spacing_hz;
  return s;
}

}  // namespace momp
