#include <doctest.h>

#include <cmath>
#include <random>

#include "gs/error.hpp"
#include "gs/nufft.hpp"
#include "oracles.hpp"

using gs::cd;
using gs::cvec;

TEST_SUITE("nufft") {

TEST_CASE("direct forward: impulse, zero, and the double-loop oracle") {
    std::array<int, 2> n1 = {8, 0};
    std::mt19937_64 rng(21);
    std::vector<double> points = oracles::random_points_1d(7, rng);

    cvec impulse(8, cd(0.0));
    impulse[4] = 1.0;  // k = 0
    cvec ones = gs::ndft_forward(1, n1, points, impulse);
    for (const cd& v : ones) CHECK(std::abs(v - cd(1.0)) < 1e-14);

    cvec zero(8, cd(0.0));
    for (const cd& v : gs::ndft_forward(1, n1, points, zero)) CHECK(std::abs(v) == 0.0);

    cvec x = oracles::random_cvec(8, rng);
    cvec got = gs::ndft_forward(1, n1, points, x);
    cvec want = oracles::ndft_forward_1d(8, points, x);
    CHECK(oracles::rel_error(got, want) < 1e-12);

    std::array<int, 2> n2 = {4, 6};
    std::vector<double> pts2 = oracles::random_points_2d(9, rng);
    cvec x2 = oracles::random_cvec(24, rng);
    cvec got2 = gs::ndft_forward(2, n2, pts2, x2);
    cvec want2 = oracles::ndft_forward_2d(4, 6, pts2, x2);
    CHECK(oracles::rel_error(got2, want2) < 1e-12);

    CHECK_THROWS_AS(gs::ndft_forward(1, n1, std::vector<double>{0.5}, x), gs::DomainError);
}

TEST_CASE("direct adjoint: trivial cases and the pairing identity") {
    std::array<int, 2> n1 = {8, 0};
    std::vector<double> origin = {0.0};
    cvec one = {cd(1.0)};
    cvec grid = gs::ndft_adjoint(1, n1, origin, one);
    for (const cd& v : grid) CHECK(std::abs(v - cd(1.0)) < 1e-14);

    std::mt19937_64 rng(22);
    std::vector<double> points = oracles::random_points_1d(11, rng);
    cvec zeros(11, cd(0.0));
    for (const cd& v : gs::ndft_adjoint(1, n1, points, zeros)) CHECK(std::abs(v) == 0.0);

    cvec x = oracles::random_cvec(8, rng);
    cvec y = oracles::random_cvec(11, rng);
    cd lhs = oracles::inner(gs::ndft_forward(1, n1, points, x), y);
    cd rhs = oracles::inner(x, gs::ndft_adjoint(1, n1, points, y));
    CHECK(std::abs(lhs - rhs) / (oracles::norm(x) * oracles::norm(y)) < 1e-12);
}

TEST_CASE("plan construction and preconditions") {
    std::mt19937_64 rng(23);
    std::vector<double> points = oracles::random_points_1d(5, rng);
    gs::NfftPlan plan = gs::plan_nfft(1, {16, 0}, points, 2.0, 6);
    CHECK(plan.oversampled_length(0) == 32);
    CHECK(plan.points_count() == 5);

    std::vector<double> bad = {0.5};
    CHECK_THROWS_AS(gs::plan_nfft(1, {16, 0}, bad, 2.0, 6), gs::DomainError);
    CHECK_THROWS_AS(gs::plan_nfft(1, {15, 0}, points, 2.0, 6), gs::DomainError);
    CHECK_THROWS_AS(gs::plan_nfft(1, {16, 0}, points, 1.1, 6), gs::DomainError);
    CHECK_THROWS_AS(gs::plan_nfft(1, {16, 0}, points, 2.0, 1), gs::DomainError);
}

TEST_CASE("fast transforms track the direct ones at the default accuracy") {
    std::mt19937_64 rng(24);

    std::vector<double> points = oracles::random_points_1d(100, rng);
    gs::NfftPlan plan = gs::plan_nfft(1, {64, 0}, points, 2.0, 6);

    cvec impulse(64, cd(0.0));
    impulse[32] = 1.0;
    for (const cd& v : plan.forward(impulse)) CHECK(std::abs(v - cd(1.0)) < 1e-7);

    cvec x = oracles::random_cvec(64, rng);
    cvec fast = plan.forward(x);
    cvec direct = gs::ndft_forward(1, {64, 0}, points, x);
    CHECK(oracles::rel_error(fast, direct) < 1e-7);

    cvec y = oracles::random_cvec(100, rng);
    cvec fast_adj = plan.adjoint(y);
    cvec direct_adj = gs::ndft_adjoint(1, {64, 0}, points, y);
    CHECK(oracles::rel_error(fast_adj, direct_adj) < 1e-7);

    // the fast pair is built as exact transposes, so pairing holds to roundoff
    cd lhs = oracles::inner(fast, y);
    cd rhs = oracles::inner(x, fast_adj);
    CHECK(std::abs(lhs - rhs) / (oracles::norm(x) * oracles::norm(y)) < 1e-12);

    std::vector<double> pts2 = oracles::random_points_2d(10, rng);
    gs::NfftPlan plan2 = gs::plan_nfft(2, {8, 8}, pts2, 2.0, 6);
    cvec x2 = oracles::random_cvec(64, rng);
    CHECK(oracles::rel_error(plan2.forward(x2), gs::ndft_forward(2, {8, 8}, pts2, x2)) < 1e-7);
    cvec y2 = oracles::random_cvec(10, rng);
    CHECK(oracles::rel_error(plan2.adjoint(y2), gs::ndft_adjoint(2, {8, 8}, pts2, y2)) < 1e-7);
}

TEST_CASE("fast transforms are linear") {
    std::mt19937_64 rng(25);
    std::vector<double> points = oracles::random_points_1d(40, rng);
    gs::NfftPlan plan = gs::plan_nfft(1, {32, 0}, points, 2.0, 6);
    cvec a = oracles::random_cvec(32, rng);
    cvec b = oracles::random_cvec(32, rng);
    cd alpha(0.3, -1.1), beta(-0.8, 0.2);
    cvec combo(32);
    for (size_t i = 0; i < 32; ++i) combo[i] = alpha * a[i] + beta * b[i];
    cvec fa = plan.forward(a), fb = plan.forward(b), fc = plan.forward(combo);
    for (size_t m = 0; m < fc.size(); ++m) {
        CHECK(std::abs(fc[m] - alpha * fa[m] - beta * fb[m]) < 1e-12);
    }
}

TEST_CASE("uniform reduction equals the direct transform on its grid") {
    std::mt19937_64 rng(26);

    cvec zero(8, cd(0.0));
    for (const cd& v : gs::uniform_ndft_fft(zero, 16, 0.5, 8)) CHECK(std::abs(v) == 0.0);

    // N1 = N = 8, M = 16, eps = 1/2: xi_m = (m - 9) / 16
    cvec x = oracles::random_cvec(8, rng);
    cvec got = gs::uniform_ndft_fft(x, 16, 0.5, 8);
    std::vector<double> points(16);
    for (int m = 1; m <= 16; ++m) points[static_cast<size_t>(m - 1)] = (m - 9) / 16.0;
    cvec want = gs::ndft_forward(1, {8, 0}, points, x);
    CHECK(oracles::rel_error(got, want) < 1e-12);

    // N1 = 4 < N = 8, M = 8, eps = 1: xi_m = (m - 5) / 8, signal zero-extended
    cvec x4 = oracles::random_cvec(4, rng);
    cvec got4 = gs::uniform_ndft_fft(x4, 8, 1.0, 8);
    std::vector<double> pts4(8);
    for (int m = 1; m <= 8; ++m) pts4[static_cast<size_t>(m - 1)] = (m - 5) / 8.0;
    // direct evaluation of sum_l x_l exp(-2 pi i (l - 1 - N1/2) xi_m)
    cvec want4(8, cd(0.0));
    for (size_t m = 0; m < 8; ++m) {
        cd acc = 0.0;
        for (int k = -2; k < 2; ++k) {
            acc += x4[static_cast<size_t>(k + 2)] *
                   std::exp(cd(0.0, -oracles::kTwoPi * k * pts4[m]));
        }
        want4[m] = acc;
    }
    CHECK(oracles::rel_error(got4, want4) < 1e-12);

    CHECK_THROWS_AS(gs::uniform_ndft_fft(x, 16, 0.3, 8), gs::DomainError);
    CHECK_THROWS_AS(gs::uniform_ndft_fft(x, 4, 0.5, 8), gs::DomainError);
}

TEST_CASE("uniform adjoint reduction matches the direct adjoint") {
    std::mt19937_64 rng(27);
    long long N = 16, M = 40;
    double eps = 0.25;
    std::vector<double> points(static_cast<size_t>(M));
    for (long long m = 1; m <= M; ++m) {
        points[static_cast<size_t>(m - 1)] =
            eps / static_cast<double>(N) * (static_cast<double>(m) - 1.0 - M / 2.0);
    }
    cvec y = oracles::random_cvec(points.size(), rng);
    cvec got = gs::uniform_ndft_adjoint_fft(y, eps, N);
    cvec want = gs::ndft_adjoint(1, {16, 0}, points, y);
    CHECK(oracles::rel_error(got, want) < 1e-12);
}

TEST_CASE("fast accuracy sweep at the acceptance sizes") {
    std::mt19937_64 rng(28);
    for (auto [n, m] : {std::pair<int, size_t>{64, 1000}, {256, 4096}}) {
        std::vector<double> points = oracles::random_points_1d(m, rng);
        gs::NfftPlan plan = gs::plan_nfft(1, {n, 0}, points, 2.0, 6);
        cvec x = oracles::random_cvec(static_cast<size_t>(n), rng);
        cvec fast = plan.forward(x);
        cvec direct = gs::ndft_forward(1, {n, 0}, points, x);
        CHECK(oracles::rel_error(fast, direct) < 1e-7);
    }
}

}  // TEST_SUITE
