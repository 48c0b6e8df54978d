#include <doctest.h>

#include <cmath>
#include <random>

#include "gs/error.hpp"
#include "gs/weights.hpp"

using gs::SamplingSet;

namespace {

SamplingSet set_1d(std::vector<double> pts) { return SamplingSet{1, std::move(pts)}; }
SamplingSet set_2d(std::vector<double> xy) { return SamplingSet{2, std::move(xy)}; }

std::vector<double> random_points_2d(size_t count, double box, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-box, box);
    std::vector<double> xy(2 * count);
    for (double& v : xy) v = coord(rng);
    return xy;
}

}  // namespace

TEST_SUITE("weights") {

TEST_CASE("1D cells are midpoint intervals clipped at the region") {
    gs::WeightSet ws = gs::voronoi_weights_1d(std::vector<double>{-0.25, 0.0, 0.25}, 0.5);
    REQUIRE(ws.mu.size() == 3);
    CHECK(ws.mu[0] == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(ws.mu[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ws.mu[2] == doctest::Approx(0.375).epsilon(1e-15));

    // result order follows the input order, not the sorted order
    gs::WeightSet swapped = gs::voronoi_weights_1d(std::vector<double>{0.25, 0.0, -0.25}, 0.5);
    CHECK(swapped.mu[0] == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(swapped.mu[2] == doctest::Approx(0.375).epsilon(1e-15));

    gs::WeightSet single = gs::voronoi_weights_1d(std::vector<double>{0.1}, 0.5);
    CHECK(single.mu[0] == doctest::Approx(1.0).epsilon(1e-15));

    // interior cells of a uniform grid have width epsilon
    double eps = 0.125;
    std::vector<double> grid;
    for (int i = -4; i <= 4; ++i) grid.push_back(eps * i);
    gs::WeightSet uniform = gs::voronoi_weights_1d(grid, 0.5);
    for (size_t i = 1; i + 1 < uniform.mu.size(); ++i) {
        CHECK(uniform.mu[i] == doctest::Approx(eps).epsilon(1e-14));
    }

    CHECK_THROWS_AS(gs::voronoi_weights_1d(std::vector<double>{0.1, 0.1}, 0.5),
                    gs::DomainError);
    CHECK_THROWS_AS(gs::voronoi_weights_1d(std::vector<double>{0.7}, 0.5), gs::DomainError);
}

TEST_CASE("2D symmetric four-point pattern quarters the square") {
    gs::WeightSet ws =
        gs::voronoi_weights_2d(std::vector<double>{0.3, 0.3, -0.3, 0.3, 0.3, -0.3, -0.3, -0.3},
                               1.0);
    for (double mu : ws.mu) CHECK(mu == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("2D cell areas tile the region exactly") {
    std::mt19937_64 rng(41);
    double K = 0.8;
    std::vector<double> xy = random_points_2d(50, K, rng);
    gs::WeightSet ws = gs::voronoi_weights_2d(xy, K);
    double total = 0.0;
    for (double mu : ws.mu) {
        CHECK(mu > 0.0);
        total += mu;
    }
    CHECK(std::abs(total - 4.0 * K * K) < 1e-9);
}

TEST_CASE("2D cell areas agree with a Monte-Carlo oracle") {
    std::mt19937_64 rng(42);
    double K = 1.0;
    size_t count = 20;
    std::vector<double> xy = random_points_2d(count, K, rng);
    gs::WeightSet ws = gs::voronoi_weights_2d(xy, K);

    std::vector<long long> hits(count, 0);
    std::uniform_real_distribution<double> coord(-K, K);
    const long long draws = 1000000;
    for (long long d = 0; d < draws; ++d) {
        double x = coord(rng), y = coord(rng);
        size_t best = 0;
        double best_dist = 1e300;
        for (size_t i = 0; i < count; ++i) {
            double dx = x - xy[2 * i], dy = y - xy[2 * i + 1];
            double dist = dx * dx + dy * dy;
            if (dist < best_dist) {
                best_dist = dist;
                best = i;
            }
        }
        ++hits[best];
    }
    for (size_t i = 0; i < count; ++i) {
        double estimate = 4.0 * K * K * static_cast<double>(hits[i]) / draws;
        CHECK(std::abs(ws.mu[i] - estimate) / ws.mu[i] < 2e-2);
    }

    CHECK_THROWS_AS(
        gs::voronoi_weights_2d(std::vector<double>{0.1, 0.2, 0.1, 0.2}, K), gs::DomainError);
}

TEST_CASE("density of a uniform grid with endpoints on the region boundary") {
    double K = 0.5, eps = 0.125;
    std::vector<double> grid;
    for (int i = -4; i <= 4; ++i) grid.push_back(eps * i);
    gs::DensityReport report = gs::density(set_1d(grid), K);
    CHECK(std::abs(report.delta_raw - eps / 2.0) < 1e-12);
    CHECK(std::abs(report.delta_scaled - eps / 4.0) < 1e-12);
    CHECK(report.satisfies_quarter_bound == (eps / 4.0 / (2.0 * K) < 0.25));

    // brute-force grid search oracle
    double brute = 0.0;
    for (double x = -K; x <= K; x += eps / 1000.0) {
        double nearest = 1e300;
        for (double g : grid) nearest = std::min(nearest, std::abs(x - g));
        brute = std::max(brute, nearest);
    }
    CHECK(std::abs(report.delta_raw - brute) < eps / 500.0);
}

TEST_CASE("density of a single point is attained at a region corner") {
    gs::DensityReport report = gs::density(set_2d({0.0, 0.0}), 1.0);
    CHECK(std::abs(report.delta_raw - std::sqrt(2.0)) < 1e-12);
    CHECK_FALSE(report.satisfies_quarter_bound);
}

TEST_CASE("2D density equals a brute-force grid search") {
    std::mt19937_64 rng(43);
    double K = 1.0;
    std::vector<double> xy = random_points_2d(15, K, rng);
    gs::DensityReport report = gs::density(set_2d(xy), K);
    double brute = 0.0;
    int steps = 400;
    for (int ix = 0; ix <= steps; ++ix) {
        for (int iy = 0; iy <= steps; ++iy) {
            double x = -K + 2.0 * K * ix / steps;
            double y = -K + 2.0 * K * iy / steps;
            double nearest = 1e300;
            for (size_t i = 0; i < xy.size() / 2; ++i) {
                nearest = std::min(nearest, std::hypot(x - xy[2 * i], y - xy[2 * i + 1]));
            }
            brute = std::max(brute, nearest);
        }
    }
    CHECK(report.delta_raw >= brute - 1e-12);        // grid search only probes a subset
    CHECK(report.delta_raw - brute < 2.0 * K / steps * 2.0);
}

TEST_CASE("reflection and scaling equivariance") {
    std::mt19937_64 rng(44);
    double K = 0.7;
    std::vector<double> xy = random_points_2d(12, K, rng);
    gs::WeightSet base = gs::voronoi_weights_2d(xy, K);
    gs::DensityReport base_density = gs::density(set_2d(xy), K);

    std::vector<double> mirrored(xy);
    for (size_t i = 0; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
    gs::WeightSet mirror = gs::voronoi_weights_2d(mirrored, K);
    for (size_t i = 0; i < base.mu.size(); ++i) {
        CHECK(std::abs(base.mu[i] - mirror.mu[i]) < 1e-12);
    }

    double s = 3.0;
    std::vector<double> scaled(xy);
    for (double& v : scaled) v *= s;
    gs::WeightSet big = gs::voronoi_weights_2d(scaled, K * s);
    gs::DensityReport big_density = gs::density(set_2d(scaled), K * s);
    for (size_t i = 0; i < base.mu.size(); ++i) {
        CHECK(std::abs(big.mu[i] - s * s * base.mu[i]) < 1e-10);
    }
    CHECK(std::abs(big_density.delta_raw - s * base_density.delta_raw) < 1e-10);
}

TEST_CASE("adding a point never increases the density") {
    std::mt19937_64 rng(45);
    double K = 1.0;
    std::vector<double> xy = random_points_2d(10, K, rng);
    double prev = gs::density(set_2d(xy), K).delta_raw;
    std::uniform_real_distribution<double> coord(-K, K);
    for (int step = 0; step < 8; ++step) {
        xy.push_back(coord(rng));
        xy.push_back(coord(rng));
        double next = gs::density(set_2d(xy), K).delta_raw;
        CHECK(next <= prev + 1e-12);
        prev = next;
    }
}

}  // TEST_SUITE
