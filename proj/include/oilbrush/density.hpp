#pragma once

#include <cstdint>
#include <vector>

#include "oilbrush/raster.hpp"

namespace oilbrush {

// Per-pixel sampling probability, normalized to [p_min, p_max] with
// p_min = p_max / 100.
struct DensityMap {
    GrayF probs;
    double p_min = 0.0;
    double p_max = 0.0;
};

struct Anchor {
    double x = 0.0;
    double y = 0.0;
};

struct AnchorSet {
    std::vector<Anchor> anchors;
    std::vector<double> probs;  // density read at the rounded anchor position
    int k() const { return static_cast<int>(anchors.size()); }
};

// Smoothed Sobel gradient magnitude, min-max normalized into [p_min, p_max].
// A featureless image (max == min gradient) maps entirely to p_min.
DensityMap build_density_map(const GrayF& gray, double p_max);

// Anchor count K = round(sum of probabilities), at least 1.
int anchor_count(const DensityMap& dm);

// Uniform-proposal rejection sampling of k distinct pixels. Deterministic for
// a given seed; a proposal budget of 1000*k guards against stalls, after
// which the remaining quota is filled with the highest-probability unsampled
// pixels (ties broken in row-major order).
AnchorSet rejection_sample(const DensityMap& dm, int k, std::uint64_t seed);

struct RelaxStats {
    // Weighted quantization energy measured at each assignment step.
    std::vector<double> energy;
};

// Weighted Lloyd relaxation: every pixel joins its nearest centroid
// (Euclidean, ties to the lowest centroid index), centroids move to the
// density-weighted mean of their members. Anchors stay real-valued; the
// returned probs are re-read at the rounded final positions.
AnchorSet voronoi_relax(const AnchorSet& anchors, const DensityMap& weights,
                        int iterations = 15, RelaxStats* stats = nullptr);

}  // namespace oilbrush
