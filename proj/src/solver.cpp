#include "gs/solver.hpp"

#include <cmath>

#include "gs/error.hpp"

namespace gs {

namespace {

double norm2(const cvec& v) {
    double acc = 0.0;
    for (const cd& z : v) acc += std::norm(z);
    return acc;
}

}  // namespace

std::pair<cvec, SolveStats> solve_least_squares(const Freq2WaveOp& op,
                                                std::span<const cd> samples,
                                                const SolveOptions& options) {
    size_t n = op.cols();
    if (samples.size() != op.rows()) throw ShapeError("sample vector length mismatch");
    if (options.tolerance <= 0) throw DomainError("tolerance must be positive");
    int max_iter = options.max_iterations > 0 ? options.max_iterations
                                              : 2 * static_cast<int>(n);

    // weighted problems iterate on sqrt(mu)-scaled data; the operator rows
    // already carry the same factors
    cvec b(samples.begin(), samples.end());
    if (op.weighted()) {
        for (size_t m = 0; m < b.size(); ++m) b[m] *= op.sqrt_weights[m];
    }

    cvec x(n, cd(0.0));
    if (options.initial_guess) {
        if (options.initial_guess->size() != n) throw ShapeError("initial guess length mismatch");
        x = *options.initial_guess;
    }

    SolveStats stats;
    double ref = std::sqrt(norm2(apply_adjoint(op, b)));
    if (ref == 0.0) {
        // zero data: the least-squares solution is the zero vector
        stats.converged = true;
        stats.history = {0.0};
        return {cvec(n, cd(0.0)), stats};
    }

    cvec r = b;
    {
        cvec tx = apply_forward(op, x);
        for (size_t m = 0; m < r.size(); ++m) r[m] -= tx[m];
    }
    cvec s = apply_adjoint(op, r);
    double gamma = norm2(s);
    stats.history.push_back(std::sqrt(gamma) / ref);
    if (stats.history.back() <= options.tolerance) {
        stats.converged = true;
        stats.residual = stats.history.back();
        return {x, stats};
    }

    // Each CG step minimizes the least-squares objective over a growing
    // Krylov space, so the final iterate is the best one; the
    // normal-equation residual recorded here is the stopping measure and
    // may tick upward along the way.
    cvec p = s;
    cvec q;
    for (int it = 1; it <= max_iter; ++it) {
        q = apply_forward(op, p);
        double qq = norm2(q);
        if (qq == 0.0) break;  // search direction in the numerical null space
        double alpha = gamma / qq;
        for (size_t i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (size_t m = 0; m < r.size(); ++m) r[m] -= alpha * q[m];
        s = apply_adjoint(op, r);
        double gamma_new = norm2(s);
        stats.iterations = it;
        stats.history.push_back(std::sqrt(gamma_new) / ref);
        if (stats.history.back() <= options.tolerance) {
            stats.converged = true;
            break;
        }
        double beta = gamma_new / gamma;
        gamma = gamma_new;
        for (size_t i = 0; i < n; ++i) p[i] = s[i] + beta * p[i];
    }
    stats.residual = stats.history.back();
    return {x, stats};
}

Eigen::VectorXcd dense_lsq_oracle(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& rhs) {
    if (matrix.rows() != rhs.size()) throw ShapeError("matrix/rhs size mismatch");
    Eigen::MatrixXcd gram = matrix.adjoint() * matrix;
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(gram);
    Eigen::VectorXd d = ldlt.vectorD().real();
    double dmax = d.cwiseAbs().maxCoeff();
    if (ldlt.info() != Eigen::Success || d.minCoeff() <= dmax * 1e-13) {
        throw NumericalError("dense least squares: rank-deficient system");
    }
    return ldlt.solve(matrix.adjoint() * rhs);
}

}  // namespace gs
