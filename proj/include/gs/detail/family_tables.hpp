#pragma once

namespace gs::detail {

// Embedded constants for one scaling-function family (p vanishing moments,
// support [-p+1, p], taps summing to 1).  Boundary data is null for p == 1.
//
// Matrix layouts (row-major):
//   H:    p x p       edge-to-edge refinement taps
//   h:    p x (2p-1)  edge-to-interior refinement taps, columns m = p..3p-2
//   seed: p x 2p      edge-function values at the integers of its support,
//                     in edge-local coordinates (left: value at n; right:
//                     value at -n), zero-padded past p+k
struct FamilyTable {
    int p;
    const double* filter;
    const double* left_H;
    const double* left_h;
    const double* left_seed;
    const double* right_H;
    const double* right_h;
    const double* right_seed;
};

const FamilyTable* family_table(int p);

}  // namespace gs::detail
