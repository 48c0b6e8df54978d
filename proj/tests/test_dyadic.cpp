#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "family_fixtures.hpp"
#include "gs/dyadic.hpp"
#include "gs/error.hpp"
#include "oracles.hpp"

using gs::Family;
using gs::Side;

namespace {

gs::ScalingFamily fam(Family f) { return gs::ScalingFamily::make(f); }

double binom(int n, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

// moments mu_r = int x^r phi(x) dx from the filter recursion
std::vector<double> scaling_moments(const gs::ScalingFamily& family, int count) {
    std::vector<double> mu = {1.0};
    for (int r = 1; r < count; ++r) {
        double acc = 0.0;
        for (int j = 0; j < r; ++j) {
            double power_sum = 0.0;
            for (int k = -family.p + 1; k <= family.p; ++k) {
                power_sum += family.tap(k) * std::pow(static_cast<double>(k), r - j);
            }
            acc += binom(r, j) * power_sum * mu[static_cast<size_t>(j)];
        }
        mu.push_back(acc / (std::exp2(r) - 1.0));
    }
    return mu;
}

double partition_of_unity_error(const gs::FunctionTable& table, int p) {
    long long n = 1LL << table.resolution;
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {  // x = i / 2^R in [0, 1)
        double sum = 0.0;
        for (int k = -p; k <= p; ++k) {
            sum += table.value_at(i - (static_cast<long long>(k) << table.resolution));
        }
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

}  // namespace

TEST_SUITE("dyadic") {

TEST_CASE("haar table is the indicator of [0, 1)") {
    gs::FunctionTable table = gs::evaluate_scaling_dyadic(fam(Family::haar), 3);
    REQUIRE(table.values.size() == 9);
    for (size_t i = 0; i < 8; ++i) CHECK(table.values[i] == 1.0);
    CHECK(table.values[8] == 0.0);
}

TEST_CASE("db2 table: partition of unity and unit integral") {
    gs::FunctionTable table = gs::evaluate_scaling_dyadic(fam(Family::db2), 8);
    CHECK(partition_of_unity_error(table, 2) < 1e-8);
    // trapezoid integral; interior endpoints vanish so plain summation works
    double h = std::ldexp(1.0, -8);
    double integral = 0.0;
    for (double v : table.values) integral += v * h;
    CHECK(std::abs(integral - 1.0) < 1e-6);
}

TEST_CASE("partition of unity holds for db2 through db8") {
    for (int f = 1; f < 8; ++f) {
        gs::ScalingFamily family = fam(static_cast<Family>(f));
        gs::FunctionTable table = gs::evaluate_scaling_dyadic(family, 10);
        CHECK(partition_of_unity_error(table, family.p) < 1e-6);
    }
}

TEST_CASE("boundary tables satisfy their dilation equations") {
    for (Family f : {Family::db2, Family::db4, Family::db8}) {
        gs::ScalingFamily family = fam(f);
        gs::FunctionTable interior = gs::evaluate_scaling_dyadic(family, 6);
        for (Side side : {Side::left, Side::right}) {
            std::vector<gs::FunctionTable> tables =
                gs::evaluate_boundary_dyadic(family, side, 6);
            const gs::BoundaryFilterSet& bf = gs::boundary_filters(f, side);
            int p = family.p;
            double worst = 0.0;
            for (int k = 0; k < p; ++k) {
                const gs::FunctionTable& t = tables[static_cast<size_t>(k)];
                // every dyadic point of resolution 5
                for (long long i = 0; i < static_cast<long long>(t.values.size()); i += 2) {
                    long long n_x = (t.support_begin << 6) + i;
                    double rhs = 0.0;
                    for (int l = 0; l < p; ++l) {
                        rhs += bf.H(k, l) * tables[static_cast<size_t>(l)].value_at(2 * n_x);
                    }
                    for (int m = p; m <= p + 2 * k; ++m) {
                        long long arg = (side == Side::left) ? 2 * n_x - (static_cast<long long>(m) << 6)
                                                             : 2 * n_x + (static_cast<long long>(m + 1) << 6);
                        rhs += bf.h(k, m - p) * interior.value_at(arg);
                    }
                    worst = std::max(worst,
                                     std::abs(t.values[static_cast<size_t>(i)] / std::sqrt(2.0) - rhs));
                }
            }
            CHECK(worst < 1e-10);
        }
    }
    CHECK_THROWS_AS(gs::evaluate_boundary_dyadic(fam(Family::haar), Side::left, 6),
                    gs::DomainError);
}

TEST_CASE("weval of constant haar coefficients is one on the half-open interval") {
    int J = 4, R = 8;
    std::vector<double> coeffs(1 << J, std::exp2(-0.5 * J));
    gs::ReconstructionEvaluation eval = gs::weval_1d(coeffs, fam(Family::haar), J, R);
    REQUIRE(eval.values.size() == (1u << R) + 1);
    for (size_t i = 0; i + 1 < eval.values.size(); ++i) {
        CHECK(eval.values[i] == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(eval.values.back() == 0.0);
}

TEST_CASE("weval of a unit interior coefficient reproduces the shifted table") {
    int J = 5, R = 10;
    gs::ScalingFamily db2 = fam(Family::db2);
    std::vector<double> coeffs(1 << J, 0.0);
    long long column = 13;  // interior: p <= 13 < 32 - p
    coeffs[static_cast<size_t>(column)] = 1.0;
    gs::ReconstructionEvaluation eval = gs::weval_1d(coeffs, db2, J, R);
    gs::FunctionTable table = gs::evaluate_scaling_dyadic(db2, R - J);
    double amp = std::exp2(0.5 * J);
    for (size_t i = 0; i < eval.values.size(); ++i) {
        double want = amp * table.value_at(static_cast<long long>(i) - (column << (R - J)));
        CHECK(std::abs(eval.values[i] - want) < 1e-12);
    }
}

TEST_CASE("weval input validation") {
    gs::ScalingFamily db2 = fam(Family::db2);
    std::vector<double> coeffs(32, 0.0);
    CHECK_THROWS_AS(gs::weval_1d(coeffs, db2, 5, 4), gs::DomainError);   // R < J
    CHECK_THROWS_AS(gs::weval_1d(coeffs, db2, 4, 8), gs::ShapeError);    // wrong length
    std::vector<double> tiny(2, 0.0);
    CHECK_THROWS_AS(gs::weval_1d(tiny, db2, 1, 4), gs::DomainError);     // 2^J < 2p
    gs::ReconstructionEvaluation zero = gs::weval_1d(coeffs, db2, 5, 8);
    for (double v : zero.values) CHECK(v == 0.0);
}

TEST_CASE("weval is linear") {
    int J = 4, R = 7;
    gs::ScalingFamily db3 = fam(Family::db3);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> a(1 << J), b(1 << J), combo(1 << J);
    double alpha = 0.7, beta = -1.3;
    for (size_t i = 0; i < a.size(); ++i) {
        a[i] = unit(rng);
        b[i] = unit(rng);
        combo[i] = alpha * a[i] + beta * b[i];
    }
    gs::ReconstructionEvaluation ea = gs::weval_1d(a, db3, J, R);
    gs::ReconstructionEvaluation eb = gs::weval_1d(b, db3, J, R);
    gs::ReconstructionEvaluation ec = gs::weval_1d(combo, db3, J, R);
    for (size_t i = 0; i < ec.values.size(); ++i) {
        CHECK(std::abs(ec.values[i] - alpha * ea.values[i] - beta * eb.values[i]) < 1e-12);
    }
}

TEST_CASE("2D weval: constant haar field and rank-1 separability") {
    int J = 3, R = 6;
    gs::ScalingFamily haar = fam(Family::haar);
    size_t n = 1u << J;
    std::vector<double> coeffs(n * n, std::exp2(-1.0 * J));
    gs::ReconstructionEvaluation eval = gs::weval_2d(coeffs, haar, J, R);
    size_t g = eval.points_per_axis();
    for (size_t iy = 0; iy + 1 < g; ++iy) {
        for (size_t ix = 0; ix + 1 < g; ++ix) {
            CHECK(eval.values[iy * g + ix] == doctest::Approx(1.0).epsilon(1e-13));
        }
    }

    gs::ScalingFamily db2 = fam(Family::db2);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> ax(n), by(n);
    for (size_t i = 0; i < n; ++i) {
        ax[i] = unit(rng);
        by[i] = unit(rng);
    }
    std::vector<double> outer(n * n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) outer[j * n + i] = ax[i] * by[j];
    }
    gs::ReconstructionEvaluation e2 = gs::weval_2d(outer, db2, J, R);
    gs::ReconstructionEvaluation ex = gs::weval_1d(ax, db2, J, R);
    gs::ReconstructionEvaluation ey = gs::weval_1d(by, db2, J, R);
    for (size_t iy = 0; iy < g; ++iy) {
        for (size_t ix = 0; ix < g; ++ix) {
            CHECK(std::abs(e2.values[iy * g + ix] - ex.values[ix] * ey.values[iy]) < 1e-12);
        }
    }

    std::vector<double> zero(n * n, 0.0);
    gs::ReconstructionEvaluation ez = gs::weval_2d(zero, db2, J, R);
    for (double v : ez.values) CHECK(v == 0.0);
}

TEST_CASE("the edge-corrected basis reproduces polynomials on the interval") {
    // coefficients computed from exact half-line moments; the evaluated
    // reconstruction must match x^r across [-1/2, 1/2]
    for (Family f : {Family::db2, Family::db4, Family::db6, Family::db8}) {
        gs::ScalingFamily family = fam(f);
        int p = family.p;
        const gs::testdata::EdgeMoments* fixture = gs::testdata::edge_moments(p);
        REQUIRE(fixture != nullptr);
        int J = 4;
        REQUIRE((1 << J) >= 2 * p);
        int R = J + 3;
        long long n = 1LL << J;
        double half = std::exp2(static_cast<double>(J - 1));
        std::vector<double> mu = scaling_moments(family, p);
        for (int r = 0; r < p; ++r) {
            std::vector<double> coeffs(static_cast<size_t>(n));
            double amp = std::exp2(-0.5 * J) * std::exp2(-static_cast<double>(J) * r);
            for (long long c = 0; c < n; ++c) {
                double acc = 0.0;
                if (c < p) {
                    for (int s = 0; s <= r; ++s) {
                        acc += binom(r, s) * std::pow(-half, r - s) *
                               fixture->left[s * p + static_cast<int>(c)];
                    }
                } else if (c >= n - p) {
                    int j = static_cast<int>(n - 1 - c);
                    for (int s = 0; s <= r; ++s) {
                        acc += binom(r, s) * std::pow(half, r - s) * fixture->right[s * p + j];
                    }
                } else {
                    double t = static_cast<double>(c);
                    for (int s = 0; s <= r; ++s) {
                        double moment = 0.0;  // M_s(t) = sum_j binom(s,j) mu_j t^{s-j}
                        for (int j = 0; j <= s; ++j) {
                            moment += binom(s, j) * mu[static_cast<size_t>(j)] *
                                      std::pow(t, s - j);
                        }
                        acc += binom(r, s) * std::pow(-half, r - s) * moment;
                    }
                }
                coeffs[static_cast<size_t>(c)] = amp * acc;
            }
            gs::ReconstructionEvaluation eval = gs::weval_1d(coeffs, family, J, R);
            double worst = 0.0;
            for (size_t i = 0; i < eval.values.size(); ++i) {
                double x = std::ldexp(static_cast<double>(i), -R) - 0.5;
                worst = std::max(worst, std::abs(eval.values[i] - std::pow(x, r)));
            }
            CHECK(worst < 1e-8);
        }
    }
}

}  // TEST_SUITE
