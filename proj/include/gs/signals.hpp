#pragma once

#include "gs/nufft.hpp"

namespace gs {

// Reference signal for the reconstruction demos: f(x) = cos(2 pi x) on
// [-1/2, 0), zero elsewhere.
double truncated_cosine(double x);

// Analytic Fourier transform of the truncated cosine at frequency xi.
cd truncated_cosine_transform(double xi);

// Transform values at every point of a 1D sampling set.
cvec truncated_cosine_transform(const SamplingSet& samples);

}  // namespace gs
