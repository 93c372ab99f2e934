#pragma once

#include "landau/convolution.hpp"
#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace landau {

/// Collision operator in conservative flux form,
///   Q = div( abar grad f - bbar f ),
/// assembled from face-centered fluxes with arithmetic averages of the
/// coefficients and zero normal flux through the outer boundary faces.
/// The discrete mass sum of Q telescopes to zero exactly.
ScalarField collision_operator(const ScalarField& f,
                               const Convolver::Coefficients& coeffs);

/// Convenience overload computing the coefficients first.
ScalarField collision_operator(const ScalarField& f, const KernelTables& tables,
                               Convolver& conv);

/// Weak-form kernel  L phi(v, v*) = 1/2 a(v-v*) : Hess phi(v) + b(v-v*) . grad phi(v)
/// with pointwise kernels; v = v* is rejected.
double weak_form_operator(const Vec3& phi_grad, const SymMat3& phi_hess,
                          const Vec3& v, const Vec3& v_star, double gamma);

/// Double Riemann sum  sum_{v != v*} f(v) f(v*) L phi(v, v*) dv^6 with the
/// diagonal excluded (the continuous integral gives it measure zero and the
/// pointwise kernels are singular there). phi is a sampled test function;
/// its derivatives come from the grid finite-difference stencils.
/// O(N^2) pairs; intended for small n.
double weak_form_rhs(const ScalarField& f, const ScalarField& phi, double gamma);

}  // namespace landau
