#pragma once

#include <Eigen/Dense>
#include <optional>

#include "gs/freq2wave.hpp"

namespace gs {

struct SolveOptions {
    int max_iterations = 0;    // 0 = twice the coefficient count
    double tolerance = 1e-10;  // on the relative normal-equation residual
    std::optional<cvec> initial_guess;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;        // ||T*(Tx - b)|| / ||T* b|| of the returned iterate
    std::vector<double> history;  // relative normal-equation residual per iteration,
                                  // length iterations + 1
    bool converged = false;
};

// Least-squares solve of T x ~ b by conjugate gradients on the normal
// equations, using only apply_forward/apply_adjoint.  For weighted
// operators pass the raw samples; the row weights sqrt(mu) are applied to
// the data here.  Non-convergence returns the best iterate with
// converged = false rather than throwing.
std::pair<cvec, SolveStats> solve_least_squares(const Freq2WaveOp& op,
                                                std::span<const cd> samples,
                                                const SolveOptions& options = {});

// Dense normal-equations solve, the oracle counterpart for small instances.
// Throws NumericalError when the matrix is numerically rank deficient.
Eigen::VectorXcd dense_lsq_oracle(const Eigen::MatrixXcd& matrix,
                                  const Eigen::VectorXcd& rhs);

}  // namespace gs
