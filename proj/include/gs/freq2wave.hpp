#pragma once

#include <Eigen/Dense>
#include <optional>

#include "gs/fourier.hpp"
#include "gs/nufft.hpp"
#include "gs/scaling.hpp"

namespace gs {

struct Freq2WaveOptions {
    // When set, frequencies up to |xi| <= bandwidth are accepted and the NFFT
    // phase factor is computed on the 1-periodized scaled points (exact for
    // integer mode indices).  Without it, scaled points must lie in
    // [-1/2, 1/2) outright.
    std::optional<double> bandwidth;
    std::vector<double> weights;  // per-row Voronoi weights mu_m; empty = unweighted
    double sigma = 2.0;
    int w = 6;
    int boundary_depth = kDefaultBoundaryDepth;
    int product_terms = kDefaultProductTerms;
    bool allow_uniform_fast_path = true;
};

// Implicit change-of-basis operator between M frequency samples and the
// 2^J (or 2^J x 2^J) coefficients of the interval-adapted scaling basis.
// Columns 1..p are left-edge functions, the middle ones interior translates
// k = n-1-2^{J-1}, the last p right-edge functions; in 2D the coefficient
// grid is column-stacked with the x index fastest.  Immutable after
// construction; concurrent applies on distinct buffers are safe.
struct Freq2WaveOp {
    int dim = 1;
    ScalingFamily family;
    int J = 0;
    long long n = 0;  // 2^J per axis
    SamplingSet samples;
    std::vector<double> sqrt_weights;  // empty when unweighted

    // per-axis scaled points 2^{-J} xi (true values, not wrapped)
    std::vector<double> zeta_x, zeta_y;
    Eigen::VectorXcd Dx, Dy;       // weighted rows folded into the x factors
    Eigen::MatrixXcd Lx, Rx, Ly, Ry;  // M x p edge blocks (empty for haar)

    std::optional<NfftPlan> plan_x, plan_y, plan_2d;
    bool uniform_fast = false;  // 1D uniform pattern routed through the DFT
    double uniform_epsilon = 0.0;

    size_t rows() const { return samples.size(); }
    size_t cols() const {
        return dim == 1 ? static_cast<size_t>(n)
                        : static_cast<size_t>(n) * static_cast<size_t>(n);
    }
    bool weighted() const { return !sqrt_weights.empty(); }
};

Freq2WaveOp freq2wave(const SamplingSet& samples, Family family, int J,
                      const Freq2WaveOptions& options = {});

// y = T x (weighted rows when the operator carries weights).
cvec apply_forward(const Freq2WaveOp& op, std::span<const cd> coeffs);

// z = T* y, the exact adjoint of apply_forward up to NFFT approximation.
cvec apply_adjoint(const Freq2WaveOp& op, std::span<const cd> samples_vec);

// Dense M x N (or M x N^2) section assembled entry-by-entry from the
// scaling-function transforms; testing/oracle use, capped by entry count.
Eigen::MatrixXcd densify(const Freq2WaveOp& op, size_t entry_cap = size_t(1) << 24);

}  // namespace gs
