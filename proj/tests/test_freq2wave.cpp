#include <doctest.h>

#include <cmath>
#include <random>

#include "gs/error.hpp"
#include "gs/fourier.hpp"
#include "gs/freq2wave.hpp"
#include "gs/patterns.hpp"
#include "oracles.hpp"

using gs::cd;
using gs::cvec;
using gs::Family;

namespace {

cvec to_cvec(const Eigen::VectorXcd& v) { return cvec(v.data(), v.data() + v.size()); }

gs::SamplingSet random_set(int dim, size_t m, double box, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-box, box);
    gs::SamplingSet set;
    set.dim = dim;
    set.coords.resize(m * static_cast<size_t>(dim));
    for (double& v : set.coords) v = coord(rng);
    return set;
}

double pairing_defect(const gs::Freq2WaveOp& op, std::mt19937_64& rng) {
    cvec x = oracles::random_cvec(op.cols(), rng);
    cvec y = oracles::random_cvec(op.rows(), rng);
    cd lhs = oracles::inner(gs::apply_forward(op, x), y);
    cd rhs = oracles::inner(x, gs::apply_adjoint(op, y));
    return std::abs(lhs - rhs) / (oracles::norm(x) * oracles::norm(y));
}

}  // namespace

TEST_SUITE("freq2wave") {

TEST_CASE("haar operator on a uniform grid: diagonal form and empty edges") {
    gs::SamplingSet grid = gs::gen_grid(16, 0.5);
    gs::Freq2WaveOp op = gs::freq2wave(grid, Family::haar, 3);
    CHECK(op.rows() == 16);
    CHECK(op.cols() == 8);
    CHECK(op.Lx.size() == 0);
    CHECK(op.uniform_fast);
    gs::ScalingFamily haar = gs::ScalingFamily::make(Family::haar);
    for (size_t m = 0; m < 16; ++m) {
        cd want = std::exp2(-1.5) * gs::fourier_scaling(haar, grid.x(m) / 8.0);
        CHECK(std::abs(op.Dx(m) - want) < 1e-15);
    }
}

TEST_CASE("densify single-frequency rows match the transform formulas") {
    gs::SamplingSet zero;
    zero.dim = 1;
    zero.coords = {0.0};
    gs::Freq2WaveOp haar_op = gs::freq2wave(zero, Family::haar, 2);
    Eigen::MatrixXcd dense = gs::densify(haar_op);
    REQUIRE(dense.rows() == 1);
    REQUIRE(dense.cols() == 4);
    for (int c = 0; c < 4; ++c) CHECK(std::abs(dense(0, c) - cd(0.5)) < 1e-15);

    gs::SamplingSet one;
    one.dim = 1;
    one.coords = {1.7};
    gs::Freq2WaveOp db2_op = gs::freq2wave(one, Family::db2, 3);
    Eigen::MatrixXcd row = gs::densify(db2_op);
    gs::ScalingFamily db2 = gs::ScalingFamily::make(Family::db2);
    double zeta = 1.7 / 8.0;
    double amp = std::exp2(-1.5);
    Eigen::VectorXcd vl = gs::fourier_boundary(db2, gs::Side::left, zeta);
    Eigen::VectorXcd vr = gs::fourier_boundary(db2, gs::Side::right, zeta);
    cd pl = amp * std::exp(cd(0.0, std::numbers::pi * 1.7));
    cd pr = amp * std::exp(cd(0.0, -std::numbers::pi * 1.7));
    CHECK(std::abs(row(0, 0) - pl * vl(0)) < 1e-13);
    CHECK(std::abs(row(0, 1) - pl * vl(1)) < 1e-13);
    CHECK(std::abs(row(0, 6) - pr * vr(1)) < 1e-13);
    CHECK(std::abs(row(0, 7) - pr * vr(0)) < 1e-13);
    for (int c = 2; c < 6; ++c) {
        cd want = amp * std::exp(cd(0.0, -oracles::kTwoPi * (c - 4) * zeta)) *
                  gs::fourier_scaling(db2, zeta);
        CHECK(std::abs(row(0, c) - want) < 1e-13);
    }

    // 2D single frequency: the row is the tensor of the axis rows
    gs::SamplingSet pt2;
    pt2.dim = 2;
    pt2.coords = {1.7, -0.9};
    gs::Freq2WaveOp op2 = gs::freq2wave(pt2, Family::db2, 3);
    Eigen::MatrixXcd row2 = gs::densify(op2);
    gs::SamplingSet px{1, {1.7}}, py{1, {-0.9}};
    Eigen::MatrixXcd rx = gs::densify(gs::freq2wave(px, Family::db2, 3));
    Eigen::MatrixXcd ry = gs::densify(gs::freq2wave(py, Family::db2, 3));
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            CHECK(std::abs(row2(0, j * 8 + i) - rx(0, i) * ry(0, j)) < 1e-10);
        }
    }
}

TEST_CASE("construction preconditions") {
    gs::SamplingSet grid = gs::gen_grid(8, 0.1);
    CHECK_THROWS_AS(gs::freq2wave(grid, Family::db2, 1), gs::DomainError);  // 2^1 < 4

    gs::SamplingSet edge;
    edge.dim = 1;
    edge.coords = {0.0, 4.0};  // + 2^{J-1} lands on the half-open boundary
    CHECK_THROWS_AS(gs::freq2wave(edge, Family::haar, 3), gs::DomainError);
    edge.coords = {0.0, -4.0};  // the negative end is inside [-1/2, 1/2)
    CHECK_NOTHROW(gs::freq2wave(edge, Family::haar, 3));

    gs::Freq2WaveOptions opt;
    opt.bandwidth = 2.0;
    gs::SamplingSet far;
    far.dim = 1;
    far.coords = {0.0, 3.0};
    CHECK_THROWS_AS(gs::freq2wave(far, Family::haar, 3, opt), gs::DomainError);
}

TEST_CASE("1D forward and adjoint match the dense section") {
    gs::SamplingSet grid = gs::gen_grid(16, 0.5);
    gs::Freq2WaveOp op = gs::freq2wave(grid, Family::haar, 3);
    Eigen::MatrixXcd dense = gs::densify(op);
    std::mt19937_64 rng(31);

    cvec zero(op.cols(), cd(0.0));
    for (const cd& v : gs::apply_forward(op, zero)) CHECK(std::abs(v) == 0.0);
    cvec zrows(op.rows(), cd(0.0));
    for (const cd& v : gs::apply_adjoint(op, zrows)) CHECK(std::abs(v) == 0.0);

    cvec x = oracles::random_cvec(op.cols(), rng);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<long>(x.size()));
    cvec want = to_cvec(dense * xv);
    CHECK(oracles::rel_error(gs::apply_forward(op, x), want) < 1e-10);

    cvec y = oracles::random_cvec(op.rows(), rng);
    Eigen::Map<const Eigen::VectorXcd> yv(y.data(), static_cast<long>(y.size()));
    cvec want_adj = to_cvec(dense.adjoint() * yv);
    CHECK(oracles::rel_error(gs::apply_adjoint(op, y), want_adj) < 1e-10);
}

TEST_CASE("db4 jittered 1D operator tracks the dense section") {
    gs::SamplingSet pts = gs::gen_jitter(64, 0.225, 0.05, 77);
    gs::Freq2WaveOp op = gs::freq2wave(pts, Family::db4, 4);
    CHECK_FALSE(op.uniform_fast);
    Eigen::MatrixXcd dense = gs::densify(op);
    std::mt19937_64 rng(32);
    cvec x = oracles::random_cvec(op.cols(), rng);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<long>(x.size()));
    CHECK(oracles::rel_error(gs::apply_forward(op, x), to_cvec(dense * xv)) < 1e-6);
}

TEST_CASE("2D operator matches the dense section and its conjugate transpose") {
    std::mt19937_64 rng(33);
    gs::SamplingSet pts = random_set(2, 20, 3.9, rng);
    gs::Freq2WaveOp op = gs::freq2wave(pts, Family::db2, 3);
    Eigen::MatrixXcd dense = gs::densify(op);

    cvec x = oracles::random_cvec(op.cols(), rng);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<long>(x.size()));
    CHECK(oracles::rel_error(gs::apply_forward(op, x), to_cvec(dense * xv)) < 1e-6);

    cvec y = oracles::random_cvec(op.rows(), rng);
    Eigen::Map<const Eigen::VectorXcd> yv(y.data(), static_cast<long>(y.size()));
    CHECK(oracles::rel_error(gs::apply_adjoint(op, y), to_cvec(dense.adjoint() * yv)) < 1e-6);
}

TEST_CASE("haar 2D operator is the pure tensor NFFT path") {
    std::mt19937_64 rng(39);
    gs::SamplingSet pts = random_set(2, 18, 3.9, rng);
    gs::Freq2WaveOp op = gs::freq2wave(pts, Family::haar, 3);
    CHECK(op.Lx.size() == 0);
    Eigen::MatrixXcd dense = gs::densify(op);
    cvec x = oracles::random_cvec(op.cols(), rng);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<long>(x.size()));
    CHECK(oracles::rel_error(gs::apply_forward(op, x), to_cvec(dense * xv)) < 1e-6);
    cvec y = oracles::random_cvec(op.rows(), rng);
    Eigen::Map<const Eigen::VectorXcd> yv(y.data(), static_cast<long>(y.size()));
    CHECK(oracles::rel_error(gs::apply_adjoint(op, y), to_cvec(dense.adjoint() * yv)) < 1e-6);
}

TEST_CASE("forward/adjoint pairing in 1D and 2D") {
    std::mt19937_64 rng(34);
    gs::SamplingSet p1 = random_set(1, 60, 7.9, rng);
    gs::Freq2WaveOp op1 = gs::freq2wave(p1, Family::db3, 4);
    gs::SamplingSet p2 = random_set(2, 50, 3.9, rng);
    gs::Freq2WaveOp op2 = gs::freq2wave(p2, Family::db2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(pairing_defect(op1, rng) < 1e-7);
        CHECK(pairing_defect(op2, rng) < 1e-7);
    }
}

TEST_CASE("row weights scale the rows by sqrt(mu) exactly") {
    std::mt19937_64 rng(35);
    for (int dim : {1, 2}) {
        gs::SamplingSet pts = random_set(dim, 12, 3.9, rng);
        gs::Freq2WaveOptions opt;
        opt.weights.assign(12, 0.0);
        std::uniform_real_distribution<double> unit(0.1, 2.0);
        for (double& w : opt.weights) w = unit(rng);

        gs::Freq2WaveOp plain = gs::freq2wave(pts, Family::db2, 3);
        gs::Freq2WaveOp weighted = gs::freq2wave(pts, Family::db2, 3, opt);
        Eigen::MatrixXcd dense_plain = gs::densify(plain);
        Eigen::MatrixXcd dense_weighted = gs::densify(weighted);
        for (int m = 0; m < 12; ++m) {
            double s = std::sqrt(opt.weights[static_cast<size_t>(m)]);
            CHECK((dense_weighted.row(m) - s * dense_plain.row(m)).norm() == 0.0);
        }
        cvec x = oracles::random_cvec(plain.cols(), rng);
        cvec yw = gs::apply_forward(weighted, x);
        cvec yp = gs::apply_forward(plain, x);
        for (size_t m = 0; m < 12; ++m) {
            CHECK(std::abs(yw[m] - std::sqrt(opt.weights[m]) * yp[m]) < 1e-12);
        }
    }
}

TEST_CASE("uniform fast path agrees with the generic NFFT route") {
    gs::SamplingSet grid = gs::gen_grid(32, 0.25);
    gs::Freq2WaveOp fast = gs::freq2wave(grid, Family::haar, 4);
    CHECK(fast.uniform_fast);
    gs::Freq2WaveOptions opt;
    opt.allow_uniform_fast_path = false;
    gs::Freq2WaveOp generic = gs::freq2wave(grid, Family::haar, 4, opt);
    CHECK_FALSE(generic.uniform_fast);
    std::mt19937_64 rng(36);
    cvec x = oracles::random_cvec(16, rng);
    CHECK(oracles::rel_error(gs::apply_forward(fast, x), gs::apply_forward(generic, x)) < 1e-7);
    cvec y = oracles::random_cvec(32, rng);
    CHECK(oracles::rel_error(gs::apply_adjoint(fast, y), gs::apply_adjoint(generic, y)) < 1e-7);
}

TEST_CASE("out-of-band frequencies are periodized exactly when a bandwidth is given") {
    // grid(128, 1/2) against scale J = 4: scaled points sweep [-2, 2)
    gs::SamplingSet grid = gs::gen_grid(128, 0.5);
    CHECK_THROWS_AS(gs::freq2wave(grid, Family::haar, 4), gs::DomainError);
    gs::Freq2WaveOptions opt;
    opt.bandwidth = 64.0;
    gs::Freq2WaveOp op = gs::freq2wave(grid, Family::haar, 4, opt);
    Eigen::MatrixXcd dense = gs::densify(op);  // built from the true transforms
    std::mt19937_64 rng(37);
    cvec x = oracles::random_cvec(op.cols(), rng);
    Eigen::Map<const Eigen::VectorXcd> xv(x.data(), static_cast<long>(x.size()));
    CHECK(oracles::rel_error(gs::apply_forward(op, x), to_cvec(dense * xv)) < 1e-10);

    opt.allow_uniform_fast_path = false;
    gs::Freq2WaveOp generic = gs::freq2wave(grid, Family::haar, 4, opt);
    CHECK(oracles::rel_error(gs::apply_forward(generic, x), to_cvec(dense * xv)) < 1e-6);
}

TEST_CASE("forward and adjoint are linear") {
    std::mt19937_64 rng(38);
    gs::SamplingSet pts = random_set(2, 15, 3.9, rng);
    gs::Freq2WaveOp op = gs::freq2wave(pts, Family::db3, 3);
    cd alpha(0.6, -0.4), beta(-1.2, 0.9);

    cvec a = oracles::random_cvec(op.cols(), rng);
    cvec b = oracles::random_cvec(op.cols(), rng);
    cvec combo(a.size());
    for (size_t i = 0; i < a.size(); ++i) combo[i] = alpha * a[i] + beta * b[i];
    cvec fa = gs::apply_forward(op, a), fb = gs::apply_forward(op, b);
    cvec fc = gs::apply_forward(op, combo);
    for (size_t m = 0; m < fc.size(); ++m) {
        CHECK(std::abs(fc[m] - alpha * fa[m] - beta * fb[m]) < 1e-12);
    }

    cvec u = oracles::random_cvec(op.rows(), rng);
    cvec v = oracles::random_cvec(op.rows(), rng);
    cvec w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = alpha * u[i] + beta * v[i];
    cvec au = gs::apply_adjoint(op, u), av = gs::apply_adjoint(op, v);
    cvec aw = gs::apply_adjoint(op, w);
    for (size_t i = 0; i < aw.size(); ++i) {
        CHECK(std::abs(aw[i] - alpha * au[i] - beta * av[i]) < 1e-12);
    }
}

TEST_CASE("densify refuses oversized sections") {
    gs::SamplingSet grid = gs::gen_grid(16, 0.5);
    gs::Freq2WaveOp op = gs::freq2wave(grid, Family::haar, 3);
    CHECK_THROWS_AS(gs::densify(op, 64), gs::DomainError);
}

TEST_CASE("shape mismatches are rejected") {
    gs::SamplingSet grid = gs::gen_grid(16, 0.5);
    gs::Freq2WaveOp op = gs::freq2wave(grid, Family::haar, 3);
    cvec wrong(7);
    CHECK_THROWS_AS(gs::apply_forward(op, wrong), gs::ShapeError);
    CHECK_THROWS_AS(gs::apply_adjoint(op, wrong), gs::ShapeError);
}

}  // TEST_SUITE
