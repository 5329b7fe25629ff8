#include "nlsq/states.hpp"

#include "nlsq/fock.hpp"

#include <cmath>

namespace nlsq {

PhotonAddedSpec::PhotonAddedSpec(Complex a, int n) : alpha(a), n_added(n) {
  if (n < 0 || n > kMaxPhotonsAdded)
    throw std::invalid_argument("PhotonAddedSpec: n_added outside [0, 5]");
  if (std::abs(a) > kMaxCoherentAmplitude)
    throw std::invalid_argument("PhotonAddedSpec: |alpha| outside supported regime");
}

ChannelSpec::ChannelSpec(double eta, double sigma)
    : transmittance(eta), dephasing_sigma(sigma) {
  if (!(eta > 0.0) || eta > 1.0)
    throw std::invalid_argument("ChannelSpec: transmittance must be in (0, 1]");
  if (sigma < 0.0)
    throw std::invalid_argument("ChannelSpec: dephasing_sigma must be >= 0");
}

Vector coherent_ket(Complex alpha, FockDim dim) {
  if (std::abs(alpha) > kMaxCoherentAmplitude)
    throw std::invalid_argument("coherent_ket: amplitude outside supported regime");
  Vector c(dim.n_levels);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim.n_levels; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  return c;
}

double laguerre(int n, double u) {
  double lm1 = 1.0, l = 1.0 - u;
  if (n == 0) return lm1;
  for (int k = 1; k < n; ++k) {
    double next = ((2 * k + 1 - u) * l - k * lm1) / (k + 1);
    lm1 = l;
    l = next;
  }
  return l;
}

Vector photon_added_coherent(const PhotonAddedSpec& spec, FockDim dim) {
  auto [a, ad] = ladder_operators(dim);
  Vector k = coherent_ket(spec.alpha, dim);
  for (int i = 0; i < spec.n_added; ++i) k = ad * k;
  const double norm2 = k.squaredNorm();
  // <alpha| a^n a†^n |alpha> = n! L_n(-|alpha|^2); deviation flags truncation
  double analytic = 1.0;
  for (int i = 1; i <= spec.n_added; ++i) analytic *= i;
  analytic *= laguerre(spec.n_added, -std::norm(spec.alpha));
  if (std::abs(norm2 - analytic) > 1e-6 * std::max(1.0, analytic))
    throw NumericError("photon_added_coherent: truncation overflow, norm " +
                       std::to_string(norm2) + " vs analytic " + std::to_string(analytic));
  return k / std::sqrt(norm2);
}

Vector squeezed_vacuum_ket(double r, FockDim dim) {
  if (std::abs(r) > kMaxSqueezing)
    throw std::invalid_argument("squeezed_vacuum_ket: squeezing outside supported regime");
  auto [a, ad] = ladder_operators(dim);
  Matrix gen = 0.5 * r * (a * a - ad * ad);
  return operator_exponential(gen) * fock_ket(dim, 0);
}

DensityMatrix loss_channel(const DensityMatrix& rho, double eta) {
  if (!(eta > 0.0) || eta > 1.0)
    throw std::invalid_argument("loss_channel: eta must be in (0, 1]");
  const auto n = rho.dim();
  if (eta == 1.0) return rho;
  auto [a, ad] = ladder_operators(FockDim(int(n)));
  Eigen::VectorXd att(n);
  for (Eigen::Index m = 0; m < n; ++m) att(m) = std::pow(eta, 0.5 * double(m));
  Matrix out = Matrix::Zero(n, n);
  Matrix m = rho.mat();
  double c = 1.0;  // (1-eta)^k / k!
  for (Eigen::Index k = 0; k < n; ++k) {
    out.noalias() += c * (att.asDiagonal() * m * att.asDiagonal());
    if (k + 1 < n) {
      m = a * m * ad;
      c *= (1.0 - eta) / double(k + 1);
      if (m.cwiseAbs().maxCoeff() * c < 1e-300) break;
    }
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

DensityMatrix dephasing_channel(const DensityMatrix& rho, double sigma) {
  if (sigma < 0.0)
    throw std::invalid_argument("dephasing_channel: negative sigma");
  const auto n = rho.dim();
  Matrix out = rho.mat();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = double(i - j);
      out(i, j) *= std::exp(-0.5 * sigma * sigma * d * d);
    }
  return DensityMatrix(std::move(out));
}

}  // namespace nlsq
