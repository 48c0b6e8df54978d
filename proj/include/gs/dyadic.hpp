#pragma once

#include <span>
#include <vector>

#include "gs/scaling.hpp"

namespace gs {

// Samples of one scaling function on the dyadic grid of spacing 2^-resolution
// covering its support.  support_begin is the left end of the support in
// integer units; values[i] is the sample at support_begin + i / 2^resolution.
struct FunctionTable {
    Family family;
    int resolution;
    long long support_begin;
    std::vector<double> values;

    // Value at numerator / 2^resolution; zero outside the stored support.
    double value_at(long long numerator) const {
        long long idx = numerator - (support_begin << resolution);
        if (idx < 0 || idx >= static_cast<long long>(values.size())) return 0.0;
        return values[static_cast<size_t>(idx)];
    }
};

// Interior scaling function on [-p+1, p] (haar: the indicator of [0, 1),
// zero at the right endpoint).  Integer values come from the eigenvector of
// the two-scale transfer matrix normalized by partition of unity; finer
// levels from the dilation equation.
FunctionTable evaluate_scaling_dyadic(const ScalingFamily& fam, int R);

// The p edge functions of one side (p >= 2), seeded at the integers from the
// truncated-translate expansion and refined through the coupled dilation
// equations.
std::vector<FunctionTable> evaluate_boundary_dyadic(const ScalingFamily& fam, Side side,
                                                    int R);

// Samples of a reconstruction on the closed dyadic grid over [-1/2, 1/2]
// (2^resolution + 1 points per axis).  In 2D, values are row-major with the
// y sample as row index: values[iy * (2^R + 1) + ix].
struct ReconstructionEvaluation {
    int resolution;
    int dim;
    std::vector<double> values;

    size_t points_per_axis() const { return (static_cast<size_t>(1) << resolution) + 1; }
};

// Evaluates sum_n w_n phi^int_{J,k(n)} on the grid at resolution R >= J.
// Coefficients are real (callers take the real part first); length 2^J.
ReconstructionEvaluation weval_1d(std::span<const double> coeffs, const ScalingFamily& fam,
                                  int J, int R);

// Tensor-product evaluation; coefficients column-stacked with the x index
// fastest (length 4^J), output (2^R + 1)^2.
ReconstructionEvaluation weval_2d(std::span<const double> coeffs, const ScalingFamily& fam,
                                  int J, int R);

}  // namespace gs
