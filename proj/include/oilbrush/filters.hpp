#pragma once

#include "oilbrush/raster.hpp"

namespace oilbrush {

// 5x5 Sobel derivatives (smoothing [1,4,6,4,1] x derivative [-1,-2,0,2,1]),
// edge-replicated borders.
void sobel_xy(const GrayF& gray, GrayF& gx, GrayF& gy);

// Gradient magnitude sqrt(gx^2 + gy^2) from the 5x5 Sobel pair.
GrayF sobel_gradient(const GrayF& gray);

// Box average with edge replication. window must be odd.
GrayF mean_filter(const GrayF& img, int window = 5);

}  // namespace oilbrush
