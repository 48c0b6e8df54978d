#include "gs/dyadic.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "gs/error.hpp"

namespace gs {

namespace {

// phi at the integers of (-p+1, p): eigenvector of T(n,m) = 2 h(2n - m) for
// eigenvalue 1, normalized so the values sum to 1 (partition of unity).
Eigen::VectorXd integer_values(const ScalingFamily& fam) {
    int p = fam.p;
    int n = 2 * p - 2;  // integers -p+2 .. p-1
    Eigen::MatrixXd sys(n + 1, n);
    sys.setZero();
    for (int r = 0; r < n; ++r) {
        int point = r - p + 2;
        for (int c = 0; c < n; ++c) {
            int m = c - p + 2;
            sys(r, c) = 2.0 * fam.tap(2 * point - m) - (r == c ? 1.0 : 0.0);
        }
    }
    sys.row(n).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs(n) = 1.0;
    Eigen::VectorXd v = sys.colPivHouseholderQr().solve(rhs);
    if ((sys * v - rhs).norm() > 1e-10) {
        throw NumericalError("integer value eigenproblem did not solve");
    }
    return v;
}

}  // namespace

FunctionTable evaluate_scaling_dyadic(const ScalingFamily& fam, int R) {
    if (R < 0) throw DomainError("resolution must be >= 0");
    FunctionTable table;
    table.family = fam.name;
    table.resolution = R;
    table.support_begin = -fam.p + 1;
    size_t len = (static_cast<size_t>(2 * fam.p - 1) << R) + 1;
    table.values.assign(len, 0.0);

    if (fam.p == 1) {
        // indicator of [0, 1): one everywhere except the right endpoint
        for (size_t i = 0; i + 1 < len; ++i) table.values[i] = 1.0;
        return table;
    }

    Eigen::VectorXd at_integers = integer_values(fam);
    for (int k = 0; k < at_integers.size(); ++k) {
        table.values[static_cast<size_t>((k + 1) << R)] = at_integers(k);
    }
    // refine: odd points at level r from level r-1 via phi(x) = 2 sum h_k phi(2x-k)
    for (int r = 1; r <= R; ++r) {
        long long step = 1LL << (R - r);
        for (long long i = step; i < static_cast<long long>(len); i += 2 * step) {
            // x = support_begin + i/2^R; numerator of x at resolution R: n_x
            long long n_x = (table.support_begin << R) + i;
            double acc = 0.0;
            for (int k = -fam.p + 1; k <= fam.p; ++k) {
                // 2x - k at resolution R: 2*n_x - k*2^R
                acc += fam.tap(k) * table.value_at(2 * n_x - (static_cast<long long>(k) << R));
            }
            table.values[static_cast<size_t>(i)] = 2.0 * acc;
        }
    }
    return table;
}

std::vector<FunctionTable> evaluate_boundary_dyadic(const ScalingFamily& fam, Side side,
                                                    int R) {
    if (fam.p < 2) throw DomainError("boundary functions require p >= 2");
    if (R < 0) throw DomainError("resolution must be >= 0");
    const BoundaryFilterSet& bf = boundary_filters(fam.name, side);
    FunctionTable interior = evaluate_scaling_dyadic(fam, R);
    int p = fam.p;
    double sqrt2 = std::sqrt(2.0);

    std::vector<FunctionTable> tables(static_cast<size_t>(p));
    for (int k = 0; k < p; ++k) {
        FunctionTable& t = tables[static_cast<size_t>(k)];
        t.family = fam.name;
        t.resolution = R;
        t.support_begin = (side == Side::left) ? 0 : -(p + k);
        t.values.assign((static_cast<size_t>(p + k) << R) + 1, 0.0);
        // integer seeds are embedded constants, indexed by edge distance
        for (int d = 0; d <= p + k; ++d) {
            long long n = (side == Side::left) ? d : -d;
            t.values[static_cast<size_t>((n - t.support_begin) << R)] =
                bf.integer_values(k, d);
        }
    }

    for (int r = 1; r <= R; ++r) {
        long long step = 1LL << (R - r);
        for (int k = 0; k < p; ++k) {
            FunctionTable& t = tables[static_cast<size_t>(k)];
            for (long long i = step; i < static_cast<long long>(t.values.size());
                 i += 2 * step) {
                long long n_x = (t.support_begin << R) + i;
                double acc = 0.0;
                for (int l = 0; l < p; ++l) {
                    acc += bf.H(k, l) * tables[static_cast<size_t>(l)].value_at(2 * n_x);
                }
                for (int m = p; m <= p + 2 * k; ++m) {
                    long long arg = (side == Side::left)
                                        ? 2 * n_x - (static_cast<long long>(m) << R)
                                        : 2 * n_x + (static_cast<long long>(m + 1) << R);
                    acc += bf.h(k, m - p) * interior.value_at(arg);
                }
                t.values[static_cast<size_t>(i)] = sqrt2 * acc;
            }
        }
    }
    return tables;
}

namespace {

// Adds w * 2^{J/2} * (column n of the scale-J basis) sampled on the closed
// grid of resolution R into out.  Shared by weval_1d and the 2D basis matrix.
struct BasisAccumulator {
    const ScalingFamily& fam;
    int J, R;
    long long n_grid;  // 2^R
    int tabres;        // R - J
    FunctionTable interior;
    std::vector<FunctionTable> left, right;
    double amplitude;

    BasisAccumulator(const ScalingFamily& f, int J_, int R_)
        : fam(f), J(J_), R(R_), n_grid(1LL << R_), tabres(R_ - J_),
          interior(evaluate_scaling_dyadic(f, tabres)),
          amplitude(std::exp2(0.5 * J_)) {
        if (f.p >= 2) {
            left = evaluate_boundary_dyadic(f, Side::left, tabres);
            right = evaluate_boundary_dyadic(f, Side::right, tabres);
        }
    }

    template <typename Sink>
    void column(long long c, double w, Sink&& sink) const {
        long long n = 1LL << J;
        long long unit = 1LL << tabres;
        double scale = w * amplitude;
        if (fam.p >= 2 && c < fam.p) {
            const FunctionTable& t = left[static_cast<size_t>(c)];
            long long hi = std::min<long long>(n_grid, (fam.p + c) * unit);
            for (long long i = 0; i <= hi; ++i) {
                sink(i, scale * t.values[static_cast<size_t>(i)]);
            }
        } else if (fam.p >= 2 && c >= n - fam.p) {
            const FunctionTable& t = right[static_cast<size_t>(n - 1 - c)];
            long long lo = std::max<long long>(0, n_grid - (fam.p + (n - 1 - c)) * unit);
            for (long long i = lo; i <= n_grid; ++i) {
                sink(i, scale * t.value_at(i - n_grid));
            }
        } else {
            long long lo = std::max<long long>(0, (c - fam.p + 1) * unit);
            long long hi = std::min<long long>(n_grid, (c + fam.p) * unit);
            for (long long i = lo; i <= hi; ++i) {
                sink(i, scale * t_interior(i - c * unit));
            }
        }
    }

    double t_interior(long long numerator) const { return interior.value_at(numerator); }
};

void check_weval_shapes(const ScalingFamily& fam, int J, int R, size_t got, size_t want) {
    if ((1LL << J) < 2 * fam.p) {
        throw DomainError("scale too small: 2^J must be >= 2p");
    }
    if (R < J) throw DomainError("resolution too coarse: R must be >= J");
    if (got != want) throw ShapeError("coefficient vector has wrong length");
}

}  // namespace

ReconstructionEvaluation weval_1d(std::span<const double> coeffs, const ScalingFamily& fam,
                                  int J, int R) {
    check_weval_shapes(fam, J, R, coeffs.size(), static_cast<size_t>(1) << J);
    BasisAccumulator basis(fam, J, R);
    ReconstructionEvaluation eval;
    eval.resolution = R;
    eval.dim = 1;
    eval.values.assign((static_cast<size_t>(1) << R) + 1, 0.0);
    for (long long c = 0; c < (1LL << J); ++c) {
        double w = coeffs[static_cast<size_t>(c)];
        if (w == 0.0) continue;
        basis.column(c, w, [&](long long i, double v) {
            eval.values[static_cast<size_t>(i)] += v;
        });
    }
    return eval;
}

ReconstructionEvaluation weval_2d(std::span<const double> coeffs, const ScalingFamily& fam,
                                  int J, int R) {
    size_t n = static_cast<size_t>(1) << J;
    check_weval_shapes(fam, J, R, coeffs.size(), n * n);
    BasisAccumulator basis(fam, J, R);
    size_t g = (static_cast<size_t>(1) << R) + 1;

    Eigen::MatrixXd B(g, n);
    B.setZero();
    for (long long c = 0; c < static_cast<long long>(n); ++c) {
        basis.column(c, 1.0, [&](long long i, double v) { B(i, c) = v; });
    }
    // coefficients are stored x-fastest: X(i, j) = coeffs[j*n + i]
    Eigen::Map<const Eigen::MatrixXd> X(coeffs.data(), n, n);
    // out(row = iy, col = ix) = sum_{i,j} X(i,j) B(ix,i) B(iy,j)
    Eigen::MatrixXd out = (B * X.transpose()) * B.transpose();

    ReconstructionEvaluation eval;
    eval.resolution = R;
    eval.dim = 2;
    eval.values.resize(g * g);
    for (size_t iy = 0; iy < g; ++iy) {
        for (size_t ix = 0; ix < g; ++ix) {
            eval.values[iy * g + ix] = out(iy, ix);
        }
    }
    return eval;
}

}  // namespace gs
