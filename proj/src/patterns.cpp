#include "gs/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gs/error.hpp"

namespace gs {

namespace {

std::vector<double> grid_axis(long long M, double epsilon) {
    std::vector<double> pts(static_cast<size_t>(M));
    double half = static_cast<double>(M) / 2.0;
    for (long long m = 0; m < M; ++m) {
        pts[static_cast<size_t>(m)] = epsilon * (static_cast<double>(m) - half);
    }
    return pts;
}

}  // namespace

SamplingSet gen_grid(long long M, double epsilon, int dim) {
    if (M < 1) throw DomainError("M must be >= 1");
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
    if (dim != 1 && dim != 2) throw DomainError("dim must be 1 or 2");
    std::vector<double> axis = grid_axis(M, epsilon);
    SamplingSet set;
    set.dim = dim;
    if (dim == 1) {
        set.coords = std::move(axis);
    } else {
        set.coords.reserve(static_cast<size_t>(M) * static_cast<size_t>(M) * 2);
        for (double x : axis) {
            for (double y : axis) {
                set.coords.push_back(x);
                set.coords.push_back(y);
            }
        }
    }
    return set;
}

SamplingSet gen_jitter(long long M, double epsilon, double eta, uint64_t seed, int dim) {
    if (!(eta >= 0) || eta >= epsilon / 2) {
        throw DomainError("eta must satisfy 0 <= eta < epsilon/2");
    }
    SamplingSet set = gen_grid(M, epsilon, dim);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> shift(-eta, eta);
    for (double& v : set.coords) v += shift(rng);
    if (dim == 1) std::sort(set.coords.begin(), set.coords.end());
    return set;
}

SamplingSet gen_spiral(int turns, double points_per_turn, double K) {
    if (turns < 1) throw DomainError("turns must be >= 1");
    if (!(points_per_turn > 0)) throw DomainError("points_per_turn must be positive");
    if (!(K > 0)) throw DomainError("K must be positive");
    long long count = std::llround(turns * points_per_turn);
    SamplingSet set;
    set.dim = 2;
    set.coords.reserve(static_cast<size_t>(count) * 2);
    for (long long i = 0; i < count; ++i) {
        double t = static_cast<double>(i) / points_per_turn;
        double radius = K * t / static_cast<double>(turns);
        double angle = 2.0 * std::numbers::pi * t;
        set.coords.push_back(radius * std::cos(angle));
        set.coords.push_back(radius * std::sin(angle));
    }
    return set;
}

}  // namespace gs
