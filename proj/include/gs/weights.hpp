#pragma once

#include <span>
#include <vector>

#include "gs/nufft.hpp"

namespace gs {

// Voronoi cell measures of the sample points inside Y_K = [-K, K]^dim,
// aligned with the input point order.
struct WeightSet {
    std::vector<double> mu;
};

struct DensityReport {
    double delta_raw;      // sup over Y_K of the distance to the nearest sample
    double delta_scaled;   // halved convention
    bool satisfies_quarter_bound;  // delta_scaled / (2K) < 1/4
};

WeightSet voronoi_weights_1d(std::span<const double> points, double K);
WeightSet voronoi_weights_2d(std::span<const double> xy_interleaved, double K);
WeightSet voronoi_weights(const SamplingSet& samples, double K);

DensityReport density(const SamplingSet& samples, double K);

}  // namespace gs
