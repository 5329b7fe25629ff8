#pragma once

#include "nlsq/types.hpp"

namespace nlsq {

// Supported truncation regime at the default 60 levels.
inline constexpr double kMaxCoherentAmplitude = 2.5;
inline constexpr double kMaxSqueezing = 1.2;
inline constexpr int kMaxPhotonsAdded = 5;

/// |alpha, n> = N_n(alpha) a†^n |alpha>.
struct PhotonAddedSpec {
  Complex alpha;
  int n_added;
  PhotonAddedSpec(Complex a, int n);
};

/// Decoherence parameters: power transmittance of the loss channel and the
/// standard deviation (radians) of Gaussian phase noise.
struct ChannelSpec {
  double transmittance = 1.0;
  double dephasing_sigma = 0.0;
  ChannelSpec() = default;
  ChannelSpec(double eta, double sigma);
};

/// Coherent state, c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
Vector coherent_ket(Complex alpha, FockDim dim);

/// Normalized a†^n |alpha>. The pre-normalization norm is checked against the
/// analytic value n! L_n(-|alpha|^2) and a deviation beyond 1e-6 relative is
/// reported as truncation overflow.
Vector photon_added_coherent(const PhotonAddedSpec& spec, FockDim dim);

/// exp((r/2)(a^2 - a†^2)) |0>; r > 0 squeezes x: var(x) = e^{-2r}/2.
Vector squeezed_vacuum_ket(double r, FockDim dim);

/// Pure-loss channel with Kraus operators
/// K_k = ((1-eta)^k / k!)^{1/2} eta^{a†a/2} a^k. Trace preserving on the
/// truncated space; mean photon number scales by eta.
DensityMatrix loss_channel(const DensityMatrix& rho, double eta);

/// Gaussian phase diffusion: rho_mn -> rho_mn exp(-sigma^2 (m-n)^2 / 2).
DensityMatrix dephasing_channel(const DensityMatrix& rho, double sigma);

/// Laguerre polynomial L_n(u) by the three-term recurrence. Exposed for the
/// photon-addition truncation sentinel.
double laguerre(int n, double u);

}  // namespace nlsq
