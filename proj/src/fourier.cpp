#include "gs/fourier.hpp"

#include <cmath>
#include <numbers>

#include "gs/error.hpp"

namespace gs {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// m0(xi) = sum_k h_k e^{-2 pi i k xi}
cd transfer_function(const ScalingFamily& fam, double xi) {
    cd acc = 0.0;
    int k = -fam.p + 1;
    for (double tap : fam.filter) {
        acc += tap * std::polar(1.0, -kTwoPi * k * xi);
        ++k;
    }
    return acc;
}

cd haar_fourier(double xi) {
    if (xi == 0.0) return 1.0;
    cd numerator = 1.0 - std::polar(1.0, -kTwoPi * xi);
    return numerator / cd(0.0, kTwoPi * xi);
}

}  // namespace

std::complex<double> fourier_scaling(const ScalingFamily& fam, double xi, int terms) {
    if (fam.p == 1) return haar_fourier(xi);
    if (terms < 1) throw DomainError("fourier_scaling: terms must be >= 1");
    // phihat(xi) = prod_{j>=1} m0(xi / 2^j), the iterated dilation relation
    // phihat(xi) = m0(xi/2) phihat(xi/2); starting the product at j = 0
    // would evaluate phihat(2 xi) instead.
    cd product = 1.0;
    double arg = xi;
    for (int j = 1; j <= terms; ++j) {
        arg *= 0.5;
        cd factor = transfer_function(fam, arg);
        product *= factor;
        if (std::abs(factor - 1.0) < 1e-16) break;
    }
    return product;
}

std::complex<double> fourier_scaling_dilated(const ScalingFamily& fam, int J, long long k,
                                             double xi, int terms) {
    if (J < 0) throw DomainError("fourier_scaling_dilated: J must be >= 0");
    double scaled = std::ldexp(xi, -J);
    double amp = std::exp2(-0.5 * J);
    return amp * std::polar(1.0, -kTwoPi * static_cast<double>(k) * scaled) *
           fourier_scaling(fam, scaled, terms);
}

Eigen::VectorXcd boundary_fourier_at_zero(const ScalingFamily& fam, Side side) {
    const BoundaryFilterSet& bf = boundary_filters(fam.name, side);
    int p = bf.p;
    // v2(0) has entries phihat(0) = 1 regardless of side.
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(p, p) - bf.U;
    Eigen::VectorXd rhs = bf.V * Eigen::VectorXd::Ones(2 * p - 1);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
    Eigen::VectorXd v = lu.solve(rhs);
    if ((lhs * v - rhs).norm() > 1e-10 * (1.0 + rhs.norm())) {
        throw NumericalError("boundary_fourier_at_zero: singular fixed-point system");
    }
    return v.cast<cd>();
}

BoundaryTransformContext make_boundary_context(const ScalingFamily& fam, Side side) {
    const BoundaryFilterSet& bf = boundary_filters(fam.name, side);
    BoundaryTransformContext ctx;
    ctx.fam = fam;
    ctx.side = side;
    ctx.U = bf.U.cast<cd>();
    ctx.V = bf.V.cast<cd>();
    ctx.v_zero = boundary_fourier_at_zero(fam, side);
    return ctx;
}

Eigen::VectorXcd fourier_boundary(const BoundaryTransformContext& ctx, double xi, int depth,
                                  int terms) {
    if (depth < 1) throw DomainError("fourier_boundary: depth must be >= 1");
    int p = ctx.fam.p;

    // phihat(xi / 2^l) for l = 1..depth via one deep product and cumulative
    // factors upward: phihat(x) = m0(x/2) phihat(x/2).
    std::vector<cd> phihat(static_cast<size_t>(depth) + 1);
    phihat[static_cast<size_t>(depth)] =
        fourier_scaling(ctx.fam, std::ldexp(xi, -depth), terms);
    for (int l = depth - 1; l >= 1; --l) {
        phihat[static_cast<size_t>(l)] = transfer_function(ctx.fam, std::ldexp(xi, -(l + 1))) *
                                         phihat[static_cast<size_t>(l) + 1];
    }

    // v1(xi) ~= U^depth v1(0) + sum_{l=0}^{depth-1} U^l V v2(xi / 2^{l+1})
    // evaluated right-to-left (Horner in U).
    Eigen::VectorXcd acc = ctx.v_zero;
    Eigen::VectorXcd v2(2 * p - 1);
    for (int l = depth - 1; l >= 0; --l) {
        double arg = std::ldexp(xi, -(l + 1));
        // left: e^{-2 pi i m arg}, m = p..3p-2; right: e^{+2 pi i (m+1) arg}.
        cd step = (ctx.side == Side::left) ? std::polar(1.0, -kTwoPi * arg)
                                           : std::polar(1.0, kTwoPi * arg);
        cd phase = (ctx.side == Side::left)
                       ? std::polar(1.0, -kTwoPi * arg * p)
                       : std::polar(1.0, kTwoPi * arg * (p + 1));
        cd amp = phihat[static_cast<size_t>(l) + 1];
        for (int m = 0; m < 2 * p - 1; ++m) {
            v2(m) = amp * phase;
            phase *= step;
        }
        acc = ctx.U * acc + ctx.V * v2;
    }
    return acc;
}

Eigen::VectorXcd fourier_boundary(const ScalingFamily& fam, Side side, double xi, int depth,
                                  int terms) {
    return fourier_boundary(make_boundary_context(fam, side), xi, depth, terms);
}

std::complex<double> fourier_scaling_2d(const ScalingFamily& fam, double xi_x, double xi_y,
                                        int terms) {
    return fourier_scaling(fam, xi_x, terms) * fourier_scaling(fam, xi_y, terms);
}

}  // namespace gs
