#pragma once

#include "nlsq/types.hpp"

#include <utility>

namespace nlsq {

/// Annihilation and creation operators: a|n> = sqrt(n)|n-1>, a_dagger = a^†.
std::pair<Matrix, Matrix> ladder_operators(FockDim dim);

/// Quadratures x = (a+a†)/√2, p = (a-a†)/(i√2), so [x,p] = i and the vacuum
/// has var(x) = 1/2.
std::pair<Matrix, Matrix> quadrature_operators(FockDim dim);

/// Fock basis vector |n>.
Vector fock_ket(FockDim dim, int n);

/// Tr[rho * obs]. Real up to roundoff when obs is Hermitian.
Complex expectation(const DensityMatrix& rho, const Matrix& obs);

/// Tr[A * B] without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Matrix exponential. Anti-Hermitian generators go through an
/// eigendecomposition (result unitary to roundoff); anything else falls back
/// to scaling-and-squaring.
Matrix operator_exponential(const Matrix& gen);

}  // namespace nlsq
