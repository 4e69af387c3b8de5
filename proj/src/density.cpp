#include "oilbrush/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oilbrush/filters.hpp"

namespace oilbrush {

DensityMap build_density_map(const GrayF& gray, double p_max) {
    if (!(p_max > 0.0 && p_max <= 1.0))
        throw std::invalid_argument("p_max must lie in (0, 1]");

    const GrayF g = mean_filter(sobel_gradient(gray), 5);
    const auto [mn_it, mx_it] = std::minmax_element(g.pixels().begin(), g.pixels().end());
    const double mn = *mn_it, mx = *mx_it;

    DensityMap dm;
    dm.p_max = p_max;
    dm.p_min = p_max / 100.0;
    dm.probs = GrayF(gray.width(), gray.height(), dm.p_min);
    if (mx > mn) {
        const double scale = (dm.p_max - dm.p_min) / (mx - mn);
        for (std::size_t i = 0; i < g.size(); ++i)
            dm.probs.pixels()[i] = dm.p_min + (g.pixels()[i] - mn) * scale;
    }
    return dm;
}

int anchor_count(const DensityMap& dm) {
    const double sum =
        std::accumulate(dm.probs.pixels().begin(), dm.probs.pixels().end(), 0.0);
    const long long k = static_cast<long long>(std::floor(sum + 0.5));
    return static_cast<int>(std::max(1LL, k));
}

AnchorSet rejection_sample(const DensityMap& dm, int k, std::uint64_t seed) {
    const int w = dm.probs.width(), h = dm.probs.height();
    const long long total = static_cast<long long>(w) * h;
    if (k < 1 || k > total)
        throw std::invalid_argument("rejection_sample: k out of range");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist_x(0, w - 1);
    std::uniform_int_distribution<int> dist_y(0, h - 1);
    std::uniform_real_distribution<double> dist_u(0.0, 1.0);

    Mask taken(w, h, 0);
    AnchorSet out;
    out.anchors.reserve(k);
    out.probs.reserve(k);

    const long long budget = 1000LL * k;
    long long proposals = 0;
    while (out.k() < k && proposals < budget) {
        ++proposals;
        const int x = dist_x(rng);
        const int y = dist_y(rng);
        const double u = dist_u(rng);
        if (taken(x, y)) continue;
        if (u <= dm.probs(x, y)) {
            taken(x, y) = 1;
            out.anchors.push_back({static_cast<double>(x), static_cast<double>(y)});
            out.probs.push_back(dm.probs(x, y));
        }
    }

    if (out.k() < k) {
        // Stall guard: fill the remaining quota with the highest-probability
        // unsampled pixels, ties in row-major order.
        std::vector<std::size_t> rest;
        rest.reserve(total - out.k());
        for (std::size_t i = 0; i < dm.probs.size(); ++i)
            if (!taken.pixels()[i]) rest.push_back(i);
        const std::size_t need = static_cast<std::size_t>(k - out.k());
        std::partial_sort(rest.begin(), rest.begin() + need, rest.end(),
                          [&](std::size_t a, std::size_t b) {
                              const double pa = dm.probs.pixels()[a];
                              const double pb = dm.probs.pixels()[b];
                              if (pa != pb) return pa > pb;
                              return a < b;
                          });
        for (std::size_t i = 0; i < need; ++i) {
            const int x = static_cast<int>(rest[i] % w);
            const int y = static_cast<int>(rest[i] / w);
            out.anchors.push_back({static_cast<double>(x), static_cast<double>(y)});
            out.probs.push_back(dm.probs.pixels()[rest[i]]);
        }
    }
    return out;
}

namespace {

// Uniform grid over the centroids so the per-pixel nearest search stays far
// below the brute-force scan while returning the identical assignment
// (lexicographic (distance^2, index) minimum).
class CentroidGrid {
public:
    CentroidGrid(const std::vector<Anchor>& c, int w, int h)
        : cell_(std::max(1, static_cast<int>(std::floor(
                    std::sqrt(static_cast<double>(w) * h / static_cast<double>(c.size())))))),
          nx_((w + cell_ - 1) / cell_),
          ny_((h + cell_ - 1) / cell_),
          buckets_(static_cast<std::size_t>(nx_) * ny_) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int bx = std::clamp(static_cast<int>(c[i].x) / cell_, 0, nx_ - 1);
            const int by = std::clamp(static_cast<int>(c[i].y) / cell_, 0, ny_ - 1);
            buckets_[static_cast<std::size_t>(by) * nx_ + bx].push_back(static_cast<int>(i));
        }
    }

    // Nearest centroid to pixel (x, y); ties go to the lowest index.
    int nearest(double x, double y, const std::vector<Anchor>& c, double* best_d2_out) const {
        const int bx = std::clamp(static_cast<int>(x) / cell_, 0, nx_ - 1);
        const int by = std::clamp(static_cast<int>(y) / cell_, 0, ny_ - 1);
        double best_d2 = std::numeric_limits<double>::infinity();
        int best = -1;
        const int max_ring = std::max(nx_, ny_);
        for (int ring = 0; ring <= max_ring; ++ring) {
            if (best >= 0) {
                const double lower = static_cast<double>(ring - 1) * cell_;
                if (lower > 0.0 && lower * lower > best_d2) break;
            }
            scan_ring(bx, by, ring, x, y, c, best_d2, best);
        }
        if (best_d2_out) *best_d2_out = best_d2;
        return best;
    }

private:
    void scan_cell(int gx, int gy, double x, double y, const std::vector<Anchor>& c,
                   double& best_d2, int& best) const {
        if (gx < 0 || gx >= nx_ || gy < 0 || gy >= ny_) return;
        for (int i : buckets_[static_cast<std::size_t>(gy) * nx_ + gx]) {
            const double dx = c[i].x - x;
            const double dy = c[i].y - y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best_d2 || (d2 == best_d2 && i < best)) {
                best_d2 = d2;
                best = i;
            }
        }
    }

    void scan_ring(int bx, int by, int ring, double x, double y,
                   const std::vector<Anchor>& c, double& best_d2, int& best) const {
        if (ring == 0) {
            scan_cell(bx, by, x, y, c, best_d2, best);
            return;
        }
        for (int i = -ring; i <= ring; ++i) {
            scan_cell(bx + i, by - ring, x, y, c, best_d2, best);
            scan_cell(bx + i, by + ring, x, y, c, best_d2, best);
        }
        for (int j = -ring + 1; j <= ring - 1; ++j) {
            scan_cell(bx - ring, by + j, x, y, c, best_d2, best);
            scan_cell(bx + ring, by + j, x, y, c, best_d2, best);
        }
    }

    int cell_;
    int nx_;
    int ny_;
    std::vector<std::vector<int>> buckets_;
};

}  // namespace

AnchorSet voronoi_relax(const AnchorSet& anchors, const DensityMap& weights,
                        int iterations, RelaxStats* stats) {
    if (anchors.k() < 1) throw std::invalid_argument("voronoi_relax: empty anchor set");
    const int w = weights.probs.width(), h = weights.probs.height();
    const std::size_t k = anchors.anchors.size();

    std::vector<Anchor> cur = anchors.anchors;
    std::vector<double> sw(k), swx(k), swy(k);
    if (stats) stats->energy.clear();

    for (int it = 0; it < iterations; ++it) {
        std::fill(sw.begin(), sw.end(), 0.0);
        std::fill(swx.begin(), swx.end(), 0.0);
        std::fill(swy.begin(), swy.end(), 0.0);
        double energy = 0.0;

        CentroidGrid grid(cur, w, h);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double d2 = 0.0;
                const int c = grid.nearest(x, y, cur, &d2);
                const double wt = weights.probs(x, y);
                energy += wt * d2;
                sw[c] += wt;
                swx[c] += wt * x;
                swy[c] += wt * y;
            }
        }
        if (stats) stats->energy.push_back(energy);

        for (std::size_t i = 0; i < k; ++i) {
            if (sw[i] > 0.0) {
                cur[i].x = swx[i] / sw[i];
                cur[i].y = swy[i] / sw[i];
            }
            // Empty cluster: centroid keeps its previous position.
        }
    }

    AnchorSet out;
    out.anchors = std::move(cur);
    out.probs.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int px = std::clamp(static_cast<int>(std::lround(out.anchors[i].x)), 0, w - 1);
        const int py = std::clamp(static_cast<int>(std::lround(out.anchors[i].y)), 0, h - 1);
        out.probs[i] = weights.probs(px, py);
    }
    return out;
}

}  // namespace oilbrush
