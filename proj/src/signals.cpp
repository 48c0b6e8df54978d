#include "gs/signals.hpp"

#include <cmath>
#include <numbers>

#include "gs/error.hpp"

namespace gs {

namespace {

// g(a) = int_{-1/2}^0 e^{-2 pi i a x} dx = (e^{pi i a} - 1) / (2 pi i a)
cd half_interval_exponential(double a) {
    if (a == 0.0) return 0.5;
    cd numerator = std::polar(1.0, std::numbers::pi * a) - 1.0;
    return numerator / cd(0.0, 2.0 * std::numbers::pi * a);
}

}  // namespace

double truncated_cosine(double x) {
    if (x >= -0.5 && x < 0.0) return std::cos(2.0 * std::numbers::pi * x);
    return 0.0;
}

cd truncated_cosine_transform(double xi) {
    return 0.5 * (half_interval_exponential(xi - 1.0) + half_interval_exponential(xi + 1.0));
}

cvec truncated_cosine_transform(const SamplingSet& samples) {
    if (samples.dim != 1) throw ShapeError("truncated cosine samples are 1D only");
    cvec out(samples.size());
    for (size_t m = 0; m < out.size(); ++m) {
        out[m] = truncated_cosine_transform(samples.x(m));
    }
    return out;
}

}  // namespace gs
