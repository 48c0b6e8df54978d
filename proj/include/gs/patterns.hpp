#pragma once

#include <cstdint>

#include "gs/nufft.hpp"

namespace gs {

// Uniform grid xi_m = epsilon (m - 1 - M/2), m = 1..M; dim = 2 gives the
// M x M tensor grid of the same 1D pattern (x-major point order).
SamplingSet gen_grid(long long M, double epsilon, int dim = 1);

// Grid points with independent uniform perturbations in [-eta, eta] from a
// seeded generator; requires eta < epsilon/2 so points stay distinct.
// 1D output is sorted; 2D keeps the tensor-grid point order.
SamplingSet gen_jitter(long long M, double epsilon, double eta, uint64_t seed, int dim = 1);

// Archimedean spiral xi(t) = (K t / turns)(cos 2 pi t, sin 2 pi t) sampled at
// t = i / points_per_turn, i = 0 .. round(turns * points_per_turn) - 1.
SamplingSet gen_spiral(int turns, double points_per_turn, double K);

}  // namespace gs
