#pragma once

#include <vector>

#include "oilbrush/raster.hpp"

namespace oilbrush {

struct Component {
    int size = 0;     // pixel count
    int cx = 0;       // centroid, rounded to nearest pixel
    int cy = 0;
};

// 4-connected labeling of the true pixels of a binary mask.
std::vector<Component> connected_components(const Mask& mask);

}  // namespace oilbrush
