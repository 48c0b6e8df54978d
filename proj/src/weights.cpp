#include "gs/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gs/error.hpp"

namespace gs {

namespace {

struct Point2 {
    double x, y;
};

// Clips a convex polygon against the half-plane a.(q - mid) < 0, i.e. the
// side of the bisector nearer the cell owner.
std::vector<Point2> clip_half_plane(const std::vector<Point2>& poly, Point2 mid, Point2 a) {
    std::vector<Point2> out;
    out.reserve(poly.size() + 2);
    size_t n = poly.size();
    auto signed_dist = [&](const Point2& q) {
        return a.x * (q.x - mid.x) + a.y * (q.y - mid.y);
    };
    for (size_t i = 0; i < n; ++i) {
        const Point2& cur = poly[i];
        const Point2& nxt = poly[(i + 1) % n];
        double dc = signed_dist(cur), dn = signed_dist(nxt);
        if (dc <= 0) out.push_back(cur);
        if ((dc < 0 && dn > 0) || (dc > 0 && dn < 0)) {
            double t = dc / (dc - dn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

double polygon_area(const std::vector<Point2>& poly) {
    double acc = 0.0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(acc);
}

void check_distinct_1d(const std::vector<double>& sorted) {
    for (size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw DomainError("degenerate input: duplicate sample points");
        }
    }
}

std::vector<Point2> voronoi_cell(const std::vector<Point2>& pts, size_t m, double K) {
    std::vector<Point2> poly = {{-K, -K}, {K, -K}, {K, K}, {-K, K}};
    const Point2& own = pts[m];
    for (size_t j = 0; j < pts.size(); ++j) {
        if (j == m) continue;
        Point2 mid = {(own.x + pts[j].x) / 2, (own.y + pts[j].y) / 2};
        Point2 a = {pts[j].x - own.x, pts[j].y - own.y};
        poly = clip_half_plane(poly, mid, a);
        if (poly.empty()) break;
    }
    return poly;
}

std::vector<Point2> to_points2(std::span<const double> xy, double K) {
    if (xy.size() % 2 != 0) throw ShapeError("2D points must be interleaved pairs");
    size_t m_count = xy.size() / 2;
    if (m_count == 0) throw ShapeError("empty point set");
    std::vector<Point2> pts(m_count);
    for (size_t m = 0; m < m_count; ++m) {
        pts[m] = {xy[2 * m], xy[2 * m + 1]};
        if (std::abs(pts[m].x) > K || std::abs(pts[m].y) > K) {
            throw DomainError("point outside the bandwidth region");
        }
    }
    for (size_t i = 0; i < m_count; ++i) {
        for (size_t j = i + 1; j < m_count; ++j) {
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) {
                throw DomainError("degenerate input: duplicate sample points");
            }
        }
    }
    return pts;
}

}  // namespace

WeightSet voronoi_weights_1d(std::span<const double> points, double K) {
    if (points.empty()) throw ShapeError("empty point set");
    if (!(K > 0)) throw DomainError("K must be positive");
    size_t m_count = points.size();
    std::vector<size_t> order(m_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return points[a] < points[b]; });
    std::vector<double> sorted(m_count);
    for (size_t i = 0; i < m_count; ++i) sorted[i] = points[order[i]];
    check_distinct_1d(sorted);
    if (sorted.front() < -K || sorted.back() > K) {
        throw DomainError("point outside the bandwidth region");
    }
    WeightSet ws;
    ws.mu.resize(m_count);
    for (size_t i = 0; i < m_count; ++i) {
        double lo = (i == 0) ? -K : 0.5 * (sorted[i - 1] + sorted[i]);
        double hi = (i + 1 == m_count) ? K : 0.5 * (sorted[i] + sorted[i + 1]);
        ws.mu[order[i]] = hi - lo;
    }
    return ws;
}

WeightSet voronoi_weights_2d(std::span<const double> xy_interleaved, double K) {
    if (!(K > 0)) throw DomainError("K must be positive");
    std::vector<Point2> pts = to_points2(xy_interleaved, K);
    WeightSet ws;
    ws.mu.resize(pts.size());
    for (size_t m = 0; m < pts.size(); ++m) {
        ws.mu[m] = polygon_area(voronoi_cell(pts, m, K));
    }
    return ws;
}

WeightSet voronoi_weights(const SamplingSet& samples, double K) {
    if (samples.dim == 1) return voronoi_weights_1d(samples.coords, K);
    return voronoi_weights_2d(samples.coords, K);
}

DensityReport density(const SamplingSet& samples, double K) {
    if (!(K > 0)) throw DomainError("K must be positive");
    double delta = 0.0;
    if (samples.dim == 1) {
        std::vector<double> sorted(samples.coords);
        if (sorted.empty()) throw ShapeError("empty point set");
        std::sort(sorted.begin(), sorted.end());
        check_distinct_1d(sorted);
        if (sorted.front() < -K || sorted.back() > K) {
            throw DomainError("point outside the bandwidth region");
        }
        // candidates: interval midpoints and the region endpoints
        delta = std::max(sorted.front() + K, K - sorted.back());
        for (size_t i = 1; i < sorted.size(); ++i) {
            delta = std::max(delta, 0.5 * (sorted[i] - sorted[i - 1]));
        }
    } else {
        std::vector<Point2> pts = to_points2(samples.coords, K);
        auto nearest = [&](const Point2& q) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point2& s : pts) {
                double d = std::hypot(q.x - s.x, q.y - s.y);
                best = std::min(best, d);
            }
            return best;
        };
        // the supremum is attained at a vertex of the clipped tessellation;
        // region corners are vertices of the cells touching them
        for (size_t m = 0; m < pts.size(); ++m) {
            for (const Point2& v : voronoi_cell(pts, m, K)) {
                delta = std::max(delta, nearest(v));
            }
        }
        for (Point2 corner : {Point2{-K, -K}, Point2{K, -K}, Point2{K, K}, Point2{-K, K}}) {
            delta = std::max(delta, nearest(corner));
        }
    }
    DensityReport report;
    report.delta_raw = delta;
    report.delta_scaled = delta / 2.0;
    report.satisfies_quarter_bound = (report.delta_scaled / (2.0 * K)) < 0.25;
    return report;
}

}  // namespace gs
