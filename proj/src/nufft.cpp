#include "gs/nufft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "gs/error.hpp"

namespace gs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is.  Plans are created with FFTW_UNALIGNED so they can execute
// on any caller buffer.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

struct FftwPlan {
    fftw_plan plan = nullptr;

    FftwPlan() = default;
    FftwPlan(int rank, const int* n, int sign) {
        cvec dummy(static_cast<size_t>(std::max(1, n[0])) *
                   static_cast<size_t>(rank > 1 ? n[1] : 1));
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft(rank, n, reinterpret_cast<fftw_complex*>(dummy.data()),
                             reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    ~FftwPlan() {
        if (plan != nullptr) {
            std::lock_guard<std::mutex> lock(fftw_mutex());
            fftw_destroy_plan(plan);
        }
    }
    FftwPlan(FftwPlan&& o) noexcept : plan(o.plan) { o.plan = nullptr; }
    FftwPlan& operator=(FftwPlan&& o) noexcept {
        std::swap(plan, o.plan);
        return *this;
    }
    FftwPlan(const FftwPlan&) = delete;
    FftwPlan& operator=(const FftwPlan&) = delete;

    void execute(cd* in, cd* out) const {
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }
};

void check_points(int dim, std::span<const double> points) {
    for (double v : points) {
        if (!(v >= -0.5 && v < 0.5)) {
            throw DomainError("scaled point outside [-1/2, 1/2)");
        }
    }
    if (points.empty() || points.size() % static_cast<size_t>(dim) != 0) {
        throw ShapeError("point array size is not a multiple of dim");
    }
}

size_t grid_len(int dim, const std::array<int, 2>& N) {
    return static_cast<size_t>(N[0]) * static_cast<size_t>(dim == 2 ? N[1] : 1);
}

}  // namespace

cvec ndft_forward(int dim, const std::array<int, 2>& N, std::span<const double> points,
                  std::span<const cd> grid) {
    check_points(dim, points);
    if (grid.size() != grid_len(dim, N)) throw ShapeError("grid size mismatch");
    size_t m_count = points.size() / static_cast<size_t>(dim);
    cvec out(m_count);
    if (dim == 1) {
        for (size_t m = 0; m < m_count; ++m) {
            cd acc = 0.0;
            for (int k = -N[0] / 2; k < N[0] / 2; ++k) {
                acc += grid[static_cast<size_t>(k + N[0] / 2)] *
                       std::polar(1.0, -kTwoPi * k * points[m]);
            }
            out[m] = acc;
        }
    } else {
        for (size_t m = 0; m < m_count; ++m) {
            double xi0 = points[2 * m], xi1 = points[2 * m + 1];
            cd acc = 0.0;
            size_t idx = 0;
            for (int k0 = -N[0] / 2; k0 < N[0] / 2; ++k0) {
                cd ph0 = std::polar(1.0, -kTwoPi * k0 * xi0);
                for (int k1 = -N[1] / 2; k1 < N[1] / 2; ++k1, ++idx) {
                    acc += grid[idx] * ph0 * std::polar(1.0, -kTwoPi * k1 * xi1);
                }
            }
            out[m] = acc;
        }
    }
    return out;
}

cvec ndft_adjoint(int dim, const std::array<int, 2>& N, std::span<const double> points,
                  std::span<const cd> samples) {
    check_points(dim, points);
    size_t m_count = points.size() / static_cast<size_t>(dim);
    if (samples.size() != m_count) throw ShapeError("sample count mismatch");
    cvec out(grid_len(dim, N), cd(0.0));
    if (dim == 1) {
        for (size_t m = 0; m < m_count; ++m) {
            for (int k = -N[0] / 2; k < N[0] / 2; ++k) {
                out[static_cast<size_t>(k + N[0] / 2)] +=
                    samples[m] * std::polar(1.0, kTwoPi * k * points[m]);
            }
        }
    } else {
        for (size_t m = 0; m < m_count; ++m) {
            double xi0 = points[2 * m], xi1 = points[2 * m + 1];
            size_t idx = 0;
            for (int k0 = -N[0] / 2; k0 < N[0] / 2; ++k0) {
                cd ph0 = samples[m] * std::polar(1.0, kTwoPi * k0 * xi0);
                for (int k1 = -N[1] / 2; k1 < N[1] / 2; ++k1, ++idx) {
                    out[idx] += ph0 * std::polar(1.0, kTwoPi * k1 * xi1);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kaiser-Bessel gridding plan
// ---------------------------------------------------------------------------

struct NfftPlan::Impl {
    int dim;
    std::array<int, 2> n_modes;   // N per axis
    std::array<int, 2> n_over;    // oversampled length per axis
    int w;
    double beta;
    size_t m_count;
    // per point, per axis: leftmost grid node and 2w+1 kernel weights
    std::vector<long long> base;
    std::vector<double> weights;
    // per axis: 1/Psi(k/n) for k = -N/2..N/2-1
    std::array<std::vector<double>, 2> deconv;
    FftwPlan fft_forward;   // sign -1 on the oversampled grid
    FftwPlan fft_backward;  // sign +1

    size_t over_len() const {
        return static_cast<size_t>(n_over[0]) * static_cast<size_t>(dim == 2 ? n_over[1] : 1);
    }
};

namespace {

// Continuous Fourier transform of the Kaiser-Bessel bump
// psi(u) = I0(beta sqrt(1 - (u/w)^2)) on [-w, w]:
// Psi(nu) = 2w sinh(sqrt(beta^2 - (2 pi w nu)^2)) / sqrt(...).
double kb_transform(double nu, int w, double beta) {
    double t = beta * beta - (kTwoPi * w * nu) * (kTwoPi * w * nu);
    if (t > 0) {
        double s = std::sqrt(t);
        return 2.0 * w * std::sinh(s) / s;
    }
    double s = std::sqrt(-t);
    return 2.0 * w * std::sin(s) / s;
}

double kb_kernel(double u, int w, double beta) {
    double t = 1.0 - (u / w) * (u / w);
    if (t < 0) return 0.0;
    return std::cyl_bessel_i(0.0, beta * std::sqrt(t));
}

}  // namespace

NfftPlan::NfftPlan(int dim, const std::array<int, 2>& N, std::span<const double> points,
                   double sigma, int w) {
    if (dim != 1 && dim != 2) throw DomainError("dim must be 1 or 2");
    for (int d = 0; d < dim; ++d) {
        if (N[d] <= 0 || N[d] % 2 != 0) throw DomainError("transform length must be even");
    }
    if (sigma < 1.25) throw DomainError("oversampling factor must be >= 1.25");
    if (w < 2) throw DomainError("kernel half-width must be >= 2");
    check_points(dim, points);

    impl_ = std::make_unique<Impl>();
    Impl& im = *impl_;
    im.dim = dim;
    im.n_modes = N;
    im.w = w;
    im.m_count = points.size() / static_cast<size_t>(dim);
    for (int d = 0; d < dim; ++d) {
        int n = static_cast<int>(std::ceil(sigma * N[d] / 2.0)) * 2;  // smallest even >= sigma N
        im.n_over[d] = n;
    }
    // Beatty/Jackson parameter choice for the full kernel width 2w.
    {
        double width = 2.0 * w;
        double t = (width / sigma) * (width / sigma) * (sigma - 0.5) * (sigma - 0.5) - 0.8;
        im.beta = std::numbers::pi * std::sqrt(std::max(t, 1.0));
    }

    int support = 2 * w + 1;
    im.base.resize(im.m_count * static_cast<size_t>(dim));
    im.weights.resize(im.m_count * static_cast<size_t>(dim) * static_cast<size_t>(support));
    for (size_t m = 0; m < im.m_count; ++m) {
        for (int d = 0; d < dim; ++d) {
            double pos = points[m * static_cast<size_t>(dim) + static_cast<size_t>(d)] *
                         im.n_over[d];
            long long j0 = std::llround(pos);
            im.base[m * static_cast<size_t>(dim) + static_cast<size_t>(d)] = j0 - w;
            double* wrow = &im.weights[(m * static_cast<size_t>(dim) + static_cast<size_t>(d)) *
                                       static_cast<size_t>(support)];
            for (int t = 0; t < support; ++t) {
                wrow[t] = kb_kernel(pos - static_cast<double>(j0 - w + t), w, im.beta);
            }
        }
    }
    for (int d = 0; d < dim; ++d) {
        im.deconv[d].resize(static_cast<size_t>(N[d]));
        for (int k = -N[d] / 2; k < N[d] / 2; ++k) {
            im.deconv[d][static_cast<size_t>(k + N[d] / 2)] =
                1.0 / kb_transform(static_cast<double>(k) / im.n_over[d], w, im.beta);
        }
    }
    im.fft_forward = FftwPlan(dim, im.n_over.data(), FFTW_FORWARD);
    im.fft_backward = FftwPlan(dim, im.n_over.data(), FFTW_BACKWARD);
}

NfftPlan::~NfftPlan() = default;
NfftPlan::NfftPlan(NfftPlan&&) noexcept = default;
NfftPlan& NfftPlan::operator=(NfftPlan&&) noexcept = default;

int NfftPlan::dim() const { return impl_->dim; }
size_t NfftPlan::points_count() const { return impl_->m_count; }
size_t NfftPlan::grid_size() const { return grid_len(impl_->dim, impl_->n_modes); }
int NfftPlan::oversampled_length(int axis) const { return impl_->n_over[axis]; }

cvec NfftPlan::forward(std::span<const cd> grid) const {
    const Impl& im = *impl_;
    if (grid.size() != grid_size()) throw ShapeError("grid size mismatch");
    cvec padded(im.over_len(), cd(0.0));
    // deconvolve and embed I_N into the oversampled grid (indices mod n)
    if (im.dim == 1) {
        int n = im.n_over[0], N = im.n_modes[0];
        for (int k = -N / 2; k < N / 2; ++k) {
            padded[static_cast<size_t>((k + n) % n)] =
                grid[static_cast<size_t>(k + N / 2)] * im.deconv[0][static_cast<size_t>(k + N / 2)];
        }
    } else {
        int n0 = im.n_over[0], n1 = im.n_over[1];
        int N0 = im.n_modes[0], N1 = im.n_modes[1];
        size_t idx = 0;
        for (int k0 = -N0 / 2; k0 < N0 / 2; ++k0) {
            size_t row = static_cast<size_t>((k0 + n0) % n0) * static_cast<size_t>(n1);
            double d0 = im.deconv[0][static_cast<size_t>(k0 + N0 / 2)];
            for (int k1 = -N1 / 2; k1 < N1 / 2; ++k1, ++idx) {
                padded[row + static_cast<size_t>((k1 + n1) % n1)] =
                    grid[idx] * (d0 * im.deconv[1][static_cast<size_t>(k1 + N1 / 2)]);
            }
        }
    }
    cvec transformed(im.over_len());
    im.fft_forward.execute(padded.data(), transformed.data());

    int support = 2 * im.w + 1;
    cvec out(im.m_count);
    if (im.dim == 1) {
        int n = im.n_over[0];
        for (size_t m = 0; m < im.m_count; ++m) {
            long long b = im.base[m];
            const double* wrow = &im.weights[m * static_cast<size_t>(support)];
            cd acc = 0.0;
            for (int t = 0; t < support; ++t) {
                long long j = ((b + t) % n + n) % n;
                acc += wrow[t] * transformed[static_cast<size_t>(j)];
            }
            out[m] = acc;
        }
    } else {
        int n0 = im.n_over[0], n1 = im.n_over[1];
        for (size_t m = 0; m < im.m_count; ++m) {
            long long b0 = im.base[2 * m], b1 = im.base[2 * m + 1];
            const double* w0 = &im.weights[(2 * m) * static_cast<size_t>(support)];
            const double* w1 = &im.weights[(2 * m + 1) * static_cast<size_t>(support)];
            cd acc = 0.0;
            for (int t0 = 0; t0 < support; ++t0) {
                long long j0 = ((b0 + t0) % n0 + n0) % n0;
                cd rowacc = 0.0;
                const cd* row = &transformed[static_cast<size_t>(j0) * static_cast<size_t>(n1)];
                for (int t1 = 0; t1 < support; ++t1) {
                    long long j1 = ((b1 + t1) % n1 + n1) % n1;
                    rowacc += w1[t1] * row[static_cast<size_t>(j1)];
                }
                acc += w0[t0] * rowacc;
            }
            out[m] = acc;
        }
    }
    return out;
}

cvec NfftPlan::adjoint(std::span<const cd> samples) const {
    const Impl& im = *impl_;
    if (samples.size() != im.m_count) throw ShapeError("sample count mismatch");
    int support = 2 * im.w + 1;
    cvec spread(im.over_len(), cd(0.0));
    if (im.dim == 1) {
        int n = im.n_over[0];
        for (size_t m = 0; m < im.m_count; ++m) {
            long long b = im.base[m];
            const double* wrow = &im.weights[m * static_cast<size_t>(support)];
            for (int t = 0; t < support; ++t) {
                long long j = ((b + t) % n + n) % n;
                spread[static_cast<size_t>(j)] += wrow[t] * samples[m];
            }
        }
    } else {
        int n0 = im.n_over[0], n1 = im.n_over[1];
        for (size_t m = 0; m < im.m_count; ++m) {
            long long b0 = im.base[2 * m], b1 = im.base[2 * m + 1];
            const double* w0 = &im.weights[(2 * m) * static_cast<size_t>(support)];
            const double* w1 = &im.weights[(2 * m + 1) * static_cast<size_t>(support)];
            for (int t0 = 0; t0 < support; ++t0) {
                long long j0 = ((b0 + t0) % n0 + n0) % n0;
                cd v0 = w0[t0] * samples[m];
                cd* row = &spread[static_cast<size_t>(j0) * static_cast<size_t>(n1)];
                for (int t1 = 0; t1 < support; ++t1) {
                    long long j1 = ((b1 + t1) % n1 + n1) % n1;
                    row[static_cast<size_t>(j1)] += w1[t1] * v0;
                }
            }
        }
    }
    cvec transformed(im.over_len());
    im.fft_backward.execute(spread.data(), transformed.data());

    cvec out(grid_size());
    if (im.dim == 1) {
        int n = im.n_over[0], N = im.n_modes[0];
        for (int k = -N / 2; k < N / 2; ++k) {
            out[static_cast<size_t>(k + N / 2)] =
                transformed[static_cast<size_t>((k + n) % n)] *
                im.deconv[0][static_cast<size_t>(k + N / 2)];
        }
    } else {
        int n0 = im.n_over[0], n1 = im.n_over[1];
        int N0 = im.n_modes[0], N1 = im.n_modes[1];
        size_t idx = 0;
        for (int k0 = -N0 / 2; k0 < N0 / 2; ++k0) {
            size_t row = static_cast<size_t>((k0 + n0) % n0) * static_cast<size_t>(n1);
            double d0 = im.deconv[0][static_cast<size_t>(k0 + N0 / 2)];
            for (int k1 = -N1 / 2; k1 < N1 / 2; ++k1, ++idx) {
                out[idx] = transformed[row + static_cast<size_t>((k1 + n1) % n1)] *
                           (d0 * im.deconv[1][static_cast<size_t>(k1 + N1 / 2)]);
            }
        }
    }
    return out;
}

NfftPlan plan_nfft(int dim, const std::array<int, 2>& N, std::span<const double> points,
                   double sigma, int w) {
    return NfftPlan(dim, N, points, sigma, w);
}

cvec nfft_forward(const NfftPlan& plan, std::span<const cd> grid) { return plan.forward(grid); }
cvec nfft_adjoint(const NfftPlan& plan, std::span<const cd> samples) {
    return plan.adjoint(samples);
}

// ---------------------------------------------------------------------------
// Uniform-grid reduction
// ---------------------------------------------------------------------------

namespace {

struct UniformSetup {
    long long inv_eps;
    long long q;
    long long n2;
};

UniformSetup uniform_setup(long long M, double epsilon, long long N) {
    if (epsilon <= 0.0) throw DomainError("epsilon must be positive");
    double inv = 1.0 / epsilon;
    long long inv_eps = std::llround(inv);
    if (inv_eps < 1 || std::abs(inv - static_cast<double>(inv_eps)) > 1e-9) {
        throw DomainError("1/epsilon must be a positive integer");
    }
    if (M < N) throw DomainError("uniform reduction requires M >= N");
    long long per = N * inv_eps;  // N / epsilon
    long long q = (M + per - 1) / per;
    return {inv_eps, q, q * per};
}

}  // namespace

cvec uniform_ndft_fft(std::span<const cd> x, long long M, double epsilon, long long N) {
    long long n1 = static_cast<long long>(x.size());
    if (n1 > N) throw DomainError("signal length must not exceed N");
    UniformSetup setup = uniform_setup(M, epsilon, N);

    cvec z(static_cast<size_t>(setup.n2), cd(0.0));
    double phase_step = std::numbers::pi * epsilon * static_cast<double>(M) /
                        static_cast<double>(N);
    for (long long l = 0; l < n1; ++l) {
        z[static_cast<size_t>(setup.q * l)] =
            x[static_cast<size_t>(l)] * std::polar(1.0, phase_step * static_cast<double>(l));
    }
    int n2_int = static_cast<int>(setup.n2);
    FftwPlan plan(1, &n2_int, FFTW_FORWARD);
    cvec transformed(z.size());
    plan.execute(z.data(), transformed.data());

    cvec out(static_cast<size_t>(M));
    for (long long m = 0; m < M; ++m) {
        double xi = epsilon / static_cast<double>(N) *
                    (static_cast<double>(m) - static_cast<double>(M) / 2.0);
        out[static_cast<size_t>(m)] =
            std::polar(1.0, std::numbers::pi * static_cast<double>(n1) * xi) *
            transformed[static_cast<size_t>(m)];
    }
    return out;
}

cvec uniform_ndft_adjoint_fft(std::span<const cd> samples, double epsilon, long long N) {
    long long M = static_cast<long long>(samples.size());
    UniformSetup setup = uniform_setup(M, epsilon, N);

    // adjoint of the forward chain: conjugate output phases, zero-pad to N2,
    // backward DFT, gather the stride-q entries, conjugate embedding phases
    cvec padded(static_cast<size_t>(setup.n2), cd(0.0));
    for (long long m = 0; m < M; ++m) {
        double xi = epsilon / static_cast<double>(N) *
                    (static_cast<double>(m) - static_cast<double>(M) / 2.0);
        padded[static_cast<size_t>(m)] =
            samples[static_cast<size_t>(m)] *
            std::polar(1.0, -std::numbers::pi * static_cast<double>(N) * xi);
    }
    int n2_int = static_cast<int>(setup.n2);
    FftwPlan plan(1, &n2_int, FFTW_BACKWARD);
    cvec transformed(padded.size());
    plan.execute(padded.data(), transformed.data());

    double phase_step = std::numbers::pi * epsilon * static_cast<double>(M) /
                        static_cast<double>(N);
    cvec out(static_cast<size_t>(N));
    for (long long l = 0; l < N; ++l) {
        out[static_cast<size_t>(l)] = transformed[static_cast<size_t>(setup.q * l)] *
                                      std::polar(1.0, -phase_step * static_cast<double>(l));
    }
    return out;
}

}  // namespace gs
