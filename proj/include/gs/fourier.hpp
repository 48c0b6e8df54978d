#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gs/scaling.hpp"

namespace gs {

// Truncation defaults for the iterative Fourier evaluations; the infinite
// product stops early once a factor is within 1e-16 of 1.
inline constexpr int kDefaultProductTerms = 48;
inline constexpr int kDefaultBoundaryDepth = 30;

// Fourier transform of the scaling function at frequency xi (cycles per
// unit).  Haar uses the closed form (1 - e^{-2 pi i xi}) / (2 pi i xi); the
// other families use the transfer-function product over `terms` factors.
std::complex<double> fourier_scaling(const ScalingFamily& fam, double xi,
                                     int terms = kDefaultProductTerms);

// 2^{-J/2} e^{-2 pi i k xi / 2^J} phihat(xi / 2^J): transform of the dilated
// and translated scaling function at scale J, translation k.
std::complex<double> fourier_scaling_dilated(const ScalingFamily& fam, int J, long long k,
                                             double xi, int terms = kDefaultProductTerms);

// Transforms of the p edge functions at xi = 0, from the fixed point
// (I - U) v = V v2(0) with v2(0) = 1.  Throws DomainError for haar and
// NumericalError if the system is singular.
Eigen::VectorXcd boundary_fourier_at_zero(const ScalingFamily& fam, Side side);

// Transforms of the p edge functions at xi, by unrolling the two-scale
// recursion `depth` times down to the zero-frequency fixed point.
Eigen::VectorXcd fourier_boundary(const ScalingFamily& fam, Side side, double xi,
                                  int depth = kDefaultBoundaryDepth,
                                  int terms = kDefaultProductTerms);

// Separable 2D transform phihat(xi_x) phihat(xi_y).
std::complex<double> fourier_scaling_2d(const ScalingFamily& fam, double xi_x, double xi_y,
                                        int terms = kDefaultProductTerms);

// Precomputed state for evaluating fourier_boundary at many frequencies
// (sampling-operator assembly touches every sample point).
struct BoundaryTransformContext {
    ScalingFamily fam;
    Side side;
    Eigen::MatrixXcd U, V;
    Eigen::VectorXcd v_zero;
};

BoundaryTransformContext make_boundary_context(const ScalingFamily& fam, Side side);
Eigen::VectorXcd fourier_boundary(const BoundaryTransformContext& ctx, double xi,
                                  int depth = kDefaultBoundaryDepth,
                                  int terms = kDefaultProductTerms);

}  // namespace gs
