#include "gs/freq2wave.hpp"

#include <cmath>
#include <numbers>

#include "gs/error.hpp"

namespace gs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

double wrap_half_open(double z) {
    double w = z - std::floor(z + 0.5);
    if (w >= 0.5) w -= 1.0;  // guard against floor rounding at the seam
    return w;
}

// xi_m = (eps/N)(m - 1 - M/2) detection on the unwrapped scaled points.
bool detect_uniform(const std::vector<double>& zeta, long long n, double* epsilon_out) {
    size_t m_count = zeta.size();
    if (m_count < 2 || static_cast<long long>(m_count) < n) return false;
    double spacing = zeta[1] - zeta[0];
    if (spacing <= 0.0) return false;
    double eps = spacing * static_cast<double>(n);
    double inv = 1.0 / eps;
    if (std::abs(inv - std::round(inv)) > 1e-9 || std::round(inv) < 1.0) return false;
    double half_m = static_cast<double>(m_count) / 2.0;
    for (size_t m = 0; m < m_count; ++m) {
        double expect = eps / static_cast<double>(n) * (static_cast<double>(m) - half_m);
        if (std::abs(zeta[m] - expect) > 1e-12) return false;
    }
    *epsilon_out = eps;
    return true;
}

struct AxisBlocks {
    Eigen::VectorXcd D;
    Eigen::MatrixXcd L, R;
};

// D, L, R factors for one axis from the natural frequencies xi.
AxisBlocks build_axis(const ScalingFamily& fam, int J, const std::vector<double>& xi,
                      const Freq2WaveOptions& opt) {
    size_t m_count = xi.size();
    AxisBlocks blocks;
    blocks.D.resize(m_count);
    double amp = std::exp2(-0.5 * J);
    for (size_t m = 0; m < m_count; ++m) {
        blocks.D(m) = amp * fourier_scaling(fam, std::ldexp(xi[m], -J), opt.product_terms);
    }
    if (fam.p >= 2) {
        int p = fam.p;
        blocks.L.resize(m_count, p);
        blocks.R.resize(m_count, p);
        BoundaryTransformContext left = make_boundary_context(fam, Side::left);
        BoundaryTransformContext right = make_boundary_context(fam, Side::right);
        for (size_t m = 0; m < m_count; ++m) {
            double scaled = std::ldexp(xi[m], -J);
            Eigen::VectorXcd vl = fourier_boundary(left, scaled, opt.boundary_depth,
                                                   opt.product_terms);
            Eigen::VectorXcd vr = fourier_boundary(right, scaled, opt.boundary_depth,
                                                   opt.product_terms);
            cd phase_l = amp * std::polar(1.0, kPi * xi[m]);
            cd phase_r = amp * std::polar(1.0, -kPi * xi[m]);
            for (int c = 0; c < p; ++c) {
                blocks.L(m, c) = phase_l * vl(c);
                // column N-p+1+c holds the edge function with index p-1-c
                blocks.R(m, c) = phase_r * vr(p - 1 - c);
            }
        }
    }
    return blocks;
}

std::vector<double> wrapped(const std::vector<double>& zeta) {
    std::vector<double> out(zeta.size());
    for (size_t i = 0; i < zeta.size(); ++i) out[i] = wrap_half_open(zeta[i]);
    return out;
}

}  // namespace

Freq2WaveOp freq2wave(const SamplingSet& samples, Family family, int J,
                      const Freq2WaveOptions& options) {
    Freq2WaveOp op;
    op.family = ScalingFamily::make(family);
    op.dim = samples.dim;
    op.J = J;
    op.samples = samples;
    if (op.dim != 1 && op.dim != 2) throw DomainError("sampling set must be 1D or 2D");
    if (samples.size() == 0) throw ShapeError("empty sampling set");
    if (J < 0 || J > 24) throw DomainError("scale J out of range");
    op.n = 1LL << J;
    if (op.n < 2 * op.family.p) {
        throw DomainError("scale too small: 2^J must be >= 2p");
    }
    for (double v : samples.coords) {
        if (!std::isfinite(v)) throw DomainError("non-finite frequency");
    }

    size_t m_count = samples.size();
    if (!options.weights.empty()) {
        if (options.weights.size() != m_count) {
            throw ShapeError("weight count does not match sample count");
        }
        op.sqrt_weights.resize(m_count);
        for (size_t m = 0; m < m_count; ++m) {
            if (!(options.weights[m] > 0.0)) throw DomainError("weights must be positive");
            op.sqrt_weights[m] = std::sqrt(options.weights[m]);
        }
    }

    std::vector<double> xi_x(m_count), xi_y;
    for (size_t m = 0; m < m_count; ++m) xi_x[m] = samples.x(m);
    if (op.dim == 2) {
        xi_y.resize(m_count);
        for (size_t m = 0; m < m_count; ++m) xi_y[m] = samples.y(m);
    }

    auto check_axis = [&](const std::vector<double>& xi) {
        for (double v : xi) {
            if (options.bandwidth) {
                if (std::abs(v) > *options.bandwidth) {
                    throw DomainError("bandwidth exceeded: |xi| > bandwidth");
                }
            } else {
                double z = std::ldexp(v, -J);
                if (!(z >= -0.5 && z < 0.5)) {
                    throw DomainError(
                        "bandwidth exceeded: scaled point outside [-1/2, 1/2) "
                        "(pass a bandwidth to allow periodized rows)");
                }
            }
        }
    };
    check_axis(xi_x);
    if (op.dim == 2) check_axis(xi_y);

    op.zeta_x.resize(m_count);
    for (size_t m = 0; m < m_count; ++m) op.zeta_x[m] = std::ldexp(xi_x[m], -J);
    if (op.dim == 2) {
        op.zeta_y.resize(m_count);
        for (size_t m = 0; m < m_count; ++m) op.zeta_y[m] = std::ldexp(xi_y[m], -J);
    }

    AxisBlocks bx = build_axis(op.family, J, xi_x, options);
    op.Dx = std::move(bx.D);
    op.Lx = std::move(bx.L);
    op.Rx = std::move(bx.R);
    if (op.dim == 2) {
        AxisBlocks by = build_axis(op.family, J, xi_y, options);
        op.Dy = std::move(by.D);
        op.Ly = std::move(by.L);
        op.Ry = std::move(by.R);
    }
    // fold row weights into the x-axis factors so each row picks them up once
    if (op.weighted()) {
        for (size_t m = 0; m < m_count; ++m) {
            op.Dx(m) *= op.sqrt_weights[m];
            if (op.family.p >= 2) {
                op.Lx.row(m) *= op.sqrt_weights[m];
                op.Rx.row(m) *= op.sqrt_weights[m];
            }
        }
    }

    std::array<int, 2> n_axis = {static_cast<int>(op.n), static_cast<int>(op.n)};
    if (op.dim == 1) {
        if (options.allow_uniform_fast_path &&
            detect_uniform(op.zeta_x, op.n, &op.uniform_epsilon)) {
            op.uniform_fast = true;
        } else {
            op.plan_x.emplace(1, n_axis, wrapped(op.zeta_x), options.sigma, options.w);
        }
    } else {
        std::vector<double> wx = wrapped(op.zeta_x);
        std::vector<double> wy = wrapped(op.zeta_y);
        op.plan_x.emplace(1, n_axis, wx, options.sigma, options.w);
        op.plan_y.emplace(1, n_axis, wy, options.sigma, options.w);
        // 2D plan axes: axis 0 = y, axis 1 = x, so the flat grid matches the
        // column-stacked coefficient layout (x index fastest).
        std::vector<double> pts(2 * m_count);
        for (size_t m = 0; m < m_count; ++m) {
            pts[2 * m] = wy[m];
            pts[2 * m + 1] = wx[m];
        }
        op.plan_2d.emplace(2, n_axis, pts, options.sigma, options.w);
    }
    return op;
}

namespace {

// internal transform of a length-N vector with edge slots zeroed
cvec internal_forward_1d(const Freq2WaveOp& op, cvec&& padded) {
    if (op.uniform_fast) {
        return uniform_ndft_fft(padded, static_cast<long long>(op.rows()),
                                op.uniform_epsilon, op.n);
    }
    return op.plan_x->forward(padded);
}

cvec internal_adjoint_1d(const Freq2WaveOp& op, std::span<const cd> v) {
    if (op.uniform_fast) {
        return uniform_ndft_adjoint_fft(v, op.uniform_epsilon, op.n);
    }
    return op.plan_x->adjoint(v);
}

}  // namespace

cvec apply_forward(const Freq2WaveOp& op, std::span<const cd> coeffs) {
    if (coeffs.size() != op.cols()) throw ShapeError("coefficient vector length mismatch");
    size_t m_count = op.rows();
    size_t n = static_cast<size_t>(op.n);
    int p = op.family.p;
    bool edged = p >= 2;
    cvec out(m_count, cd(0.0));

    if (op.dim == 1) {
        cvec padded(coeffs.begin(), coeffs.end());
        if (edged) {
            for (int c = 0; c < p; ++c) {
                padded[static_cast<size_t>(c)] = 0.0;
                padded[n - 1 - static_cast<size_t>(c)] = 0.0;
            }
        }
        cvec internal = internal_forward_1d(op, std::move(padded));
        for (size_t m = 0; m < m_count; ++m) out[m] = op.Dx(m) * internal[m];
        if (edged) {
            Eigen::Map<const Eigen::VectorXcd> x(coeffs.data(), coeffs.size());
            Eigen::Map<Eigen::VectorXcd> y(out.data(), out.size());
            y += op.Lx * x.head(p) + op.Rx * x.tail(p);
        }
        return out;
    }

    Eigen::Map<const Eigen::MatrixXcd> X(coeffs.data(), n, n);  // X(i,j), i = x index
    Eigen::Map<Eigen::VectorXcd> y(out.data(), out.size());

    // internal x internal: 2D NFFT of the interior-only grid, scaled by Dx Dy
    {
        cvec padded(coeffs.begin(), coeffs.end());
        Eigen::Map<Eigen::MatrixXcd> P(padded.data(), n, n);
        if (edged) {
            P.topRows(p).setZero();
            P.bottomRows(p).setZero();
            P.leftCols(p).setZero();
            P.rightCols(p).setZero();
        }
        cvec internal = op.plan_2d->forward(padded);
        for (size_t m = 0; m < m_count; ++m) out[m] += op.Dx(m) * op.Dy(m) * internal[m];
    }
    if (!edged) return out;

    size_t np = n - static_cast<size_t>(p);
    // corners: dense p x p blocks combined through per-axis factors
    auto corner = [&](const Eigen::MatrixXcd& Ax, size_t row0, const Eigen::MatrixXcd& By,
                      size_t col0) {
        Eigen::MatrixXcd sub = X.block(row0, col0, p, p);
        Eigen::MatrixXcd tmp = Ax * sub;  // M x p
        y += (tmp.array() * By.array()).rowwise().sum().matrix();
    };
    corner(op.Lx, 0, op.Ly, 0);
    corner(op.Lx, 0, op.Ry, np);
    corner(op.Rx, np, op.Ly, 0);
    corner(op.Rx, np, op.Ry, np);

    // sides: 1D NFFT along the interior axis, dense edge factor on the other
    cvec line(n);
    auto side_x_edge = [&](const Eigen::MatrixXcd& Ax, size_t row0) {
        for (int c = 0; c < p; ++c) {
            std::fill(line.begin(), line.end(), cd(0.0));
            for (size_t j = static_cast<size_t>(p); j < np; ++j) {
                line[j] = X(row0 + static_cast<size_t>(c), j);
            }
            cvec u = op.plan_y->forward(line);
            for (size_t m = 0; m < m_count; ++m) {
                out[m] += Ax(m, c) * op.Dy(m) * u[m];
            }
        }
    };
    side_x_edge(op.Lx, 0);
    side_x_edge(op.Rx, np);
    auto side_y_edge = [&](const Eigen::MatrixXcd& By, size_t col0) {
        for (int c = 0; c < p; ++c) {
            std::fill(line.begin(), line.end(), cd(0.0));
            for (size_t i = static_cast<size_t>(p); i < np; ++i) {
                line[i] = X(i, col0 + static_cast<size_t>(c));
            }
            cvec u = op.plan_x->forward(line);
            for (size_t m = 0; m < m_count; ++m) {
                out[m] += By(m, c) * op.Dx(m) * u[m];
            }
        }
    };
    side_y_edge(op.Ly, 0);
    side_y_edge(op.Ry, np);
    return out;
}

cvec apply_adjoint(const Freq2WaveOp& op, std::span<const cd> samples_vec) {
    if (samples_vec.size() != op.rows()) throw ShapeError("sample vector length mismatch");
    size_t m_count = op.rows();
    size_t n = static_cast<size_t>(op.n);
    int p = op.family.p;
    bool edged = p >= 2;
    Eigen::Map<const Eigen::VectorXcd> u(samples_vec.data(), samples_vec.size());

    if (op.dim == 1) {
        cvec v(m_count);
        for (size_t m = 0; m < m_count; ++m) v[m] = std::conj(op.Dx(m)) * samples_vec[m];
        cvec z = internal_adjoint_1d(op, v);
        if (edged) {
            for (int c = 0; c < p; ++c) {
                z[static_cast<size_t>(c)] = 0.0;
                z[n - 1 - static_cast<size_t>(c)] = 0.0;
            }
            Eigen::Map<Eigen::VectorXcd> zv(z.data(), z.size());
            zv.head(p) += op.Lx.adjoint() * u;
            zv.tail(p) += op.Rx.adjoint() * u;
        }
        return z;
    }

    cvec out(op.cols(), cd(0.0));
    Eigen::Map<Eigen::MatrixXcd> Z(out.data(), n, n);

    {
        cvec v(m_count);
        for (size_t m = 0; m < m_count; ++m) {
            v[m] = std::conj(op.Dx(m) * op.Dy(m)) * samples_vec[m];
        }
        cvec w = op.plan_2d->adjoint(v);
        Eigen::Map<const Eigen::MatrixXcd> W(w.data(), n, n);
        size_t ni = n - 2 * static_cast<size_t>(p);
        if (edged) {
            Z.block(p, p, ni, ni) = W.block(p, p, ni, ni);
        } else {
            Z = W;
        }
    }
    if (!edged) return out;

    size_t np = n - static_cast<size_t>(p);
    auto corner = [&](const Eigen::MatrixXcd& Ax, size_t row0, const Eigen::MatrixXcd& By,
                      size_t col0) {
        Eigen::MatrixXcd tmp = u.asDiagonal() * By.conjugate();  // M x p
        Z.block(row0, col0, p, p) += Ax.adjoint() * tmp;
    };
    corner(op.Lx, 0, op.Ly, 0);
    corner(op.Lx, 0, op.Ry, np);
    corner(op.Rx, np, op.Ly, 0);
    corner(op.Rx, np, op.Ry, np);

    cvec v(m_count);
    auto side_x_edge = [&](const Eigen::MatrixXcd& Ax, size_t row0) {
        for (int c = 0; c < p; ++c) {
            for (size_t m = 0; m < m_count; ++m) {
                v[m] = std::conj(Ax(m, c) * op.Dy(m)) * samples_vec[m];
            }
            cvec w = op.plan_y->adjoint(v);
            for (size_t j = static_cast<size_t>(p); j < np; ++j) {
                Z(row0 + static_cast<size_t>(c), j) += w[j];
            }
        }
    };
    side_x_edge(op.Lx, 0);
    side_x_edge(op.Rx, np);
    auto side_y_edge = [&](const Eigen::MatrixXcd& By, size_t col0) {
        for (int c = 0; c < p; ++c) {
            for (size_t m = 0; m < m_count; ++m) {
                v[m] = std::conj(By(m, c) * op.Dx(m)) * samples_vec[m];
            }
            cvec w = op.plan_x->adjoint(v);
            for (size_t i = static_cast<size_t>(p); i < np; ++i) {
                Z(i, col0 + static_cast<size_t>(c)) += w[i];
            }
        }
    };
    side_y_edge(op.Ly, 0);
    side_y_edge(op.Ry, np);
    return out;
}

namespace {

// one dense row per axis, straight from the transform formulas
Eigen::VectorXcd dense_axis_row(const Freq2WaveOp& op, double xi,
                                const BoundaryTransformContext* left,
                                const BoundaryTransformContext* right) {
    size_t n = static_cast<size_t>(op.n);
    int p = op.family.p;
    double scaled = std::ldexp(xi, -op.J);
    double amp = std::exp2(-0.5 * op.J);
    Eigen::VectorXcd row(n);
    cd interior = amp * fourier_scaling(op.family, scaled);
    for (size_t c = 0; c < n; ++c) {
        long long k = static_cast<long long>(c) - op.n / 2;
        row(c) = interior * std::polar(1.0, -kTwoPi * static_cast<double>(k) * scaled);
    }
    if (p >= 2) {
        Eigen::VectorXcd vl = fourier_boundary(*left, scaled);
        Eigen::VectorXcd vr = fourier_boundary(*right, scaled);
        cd phase_l = amp * std::polar(1.0, kPi * xi);
        cd phase_r = amp * std::polar(1.0, -kPi * xi);
        for (int c = 0; c < p; ++c) {
            row(c) = phase_l * vl(c);
            row(n - static_cast<size_t>(p) + static_cast<size_t>(c)) = phase_r * vr(p - 1 - c);
        }
    }
    return row;
}

}  // namespace

Eigen::MatrixXcd densify(const Freq2WaveOp& op, size_t entry_cap) {
    size_t m_count = op.rows();
    size_t n_cols = op.cols();
    if (m_count * n_cols > entry_cap) {
        throw DomainError("densify: matrix exceeds the entry cap");
    }
    std::optional<BoundaryTransformContext> left, right;
    if (op.family.p >= 2) {
        left = make_boundary_context(op.family, Side::left);
        right = make_boundary_context(op.family, Side::right);
    }
    Eigen::MatrixXcd out(m_count, n_cols);
    for (size_t m = 0; m < m_count; ++m) {
        double weight = op.weighted() ? op.sqrt_weights[m] : 1.0;
        Eigen::VectorXcd rx = dense_axis_row(op, op.samples.x(m), left ? &*left : nullptr,
                                             right ? &*right : nullptr);
        if (op.dim == 1) {
            out.row(m) = weight * rx.transpose();
        } else {
            Eigen::VectorXcd ry = dense_axis_row(op, op.samples.y(m), left ? &*left : nullptr,
                                                 right ? &*right : nullptr);
            size_t n = static_cast<size_t>(op.n);
            for (size_t j = 0; j < n; ++j) {
                for (size_t i = 0; i < n; ++i) {
                    out(m, j * n + i) = weight * rx(i) * ry(j);
                }
            }
        }
    }
    return out;
}

}  // namespace gs
