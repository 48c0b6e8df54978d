#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace gs {

enum class Family { haar, db2, db3, db4, db5, db6, db7, db8 };

Family family_from_string(std::string_view name);
std::string_view family_name(Family f);

// Low-pass filter of a scaling-function family.  Taps are indexed
// k = -p+1..p (support convention [-p+1, p]) and sum to 1, so the transfer
// function m0 satisfies m0(0) = 1.  Immutable; safe to share across threads.
struct ScalingFamily {
    Family name;
    int p;                       // vanishing moments (1 for haar)
    std::vector<double> filter;  // 2p taps, index k-(-p+1)

    double tap(int k) const {
        if (k < -p + 1 || k > p) return 0.0;
        return filter[static_cast<size_t>(k + p - 1)];
    }

    static ScalingFamily make(Family f);
};

// Low-pass filter taps ordered by k; throws DomainError for unknown names.
std::vector<double> filter_coefficients(Family f);

enum class Side { left, right };

// Refinement data for the p edge-corrected scaling functions of one side.
// Left edge functions phiL_k have support [0, p+k]; right edge functions
// phiR_k have support [-p-k, 0] (k = 0 nearest the edge in both cases).
//
//   1/sqrt(2) phiL_k(x) = sum_l H(k,l) phiL_l(2x) + sum_{m=p}^{p+2k} h(k,m) phi(2x-m)
//   1/sqrt(2) phiR_k(x) = sum_l H(k,l) phiR_l(2x) + sum_{m=p}^{p+2k} h(k,m) phi(2x+m+1)
//
// U = H/sqrt(2), V = h/sqrt(2) drive the Fourier-domain recursion.
// integer_values row k holds the edge-function samples at the integers of
// its support, indexed by distance from the edge (column n is phiL_k(n) on
// the left, phiR_k(-n) on the right), zero past p+k.  They seed the dyadic
// cascade.
struct BoundaryFilterSet {
    Side side;
    int p;
    Eigen::MatrixXd H;  // p x p
    Eigen::MatrixXd h;  // p x (2p-1), columns m = p..3p-2
    Eigen::MatrixXd U;  // H / sqrt(2)
    Eigen::MatrixXd V;  // h / sqrt(2)
    Eigen::MatrixXd integer_values;  // p x 2p
};

// Cached per (family, side); throws DomainError for haar (p = 1 has no
// boundary corrections).
const BoundaryFilterSet& boundary_filters(Family f, Side side);

}  // namespace gs
