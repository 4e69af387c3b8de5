#pragma once

#include "oilbrush/raster.hpp"

namespace oilbrush {

// HSV with hue in radians [0, 2pi), saturation in [0, 1], value in [0, 255].
struct HsvPixel {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
};

// Shortest angular distance between two hues on the circle.
double circular_hue_distance(double a, double b);

HsvPixel rgb_to_hsv(const Rgb8& c);
Rgb8 hsv_to_rgb(const HsvPixel& c);

Raster<HsvPixel> rgb_to_hsv(const Raster<Rgb8>& img);

// Rec.601 luminance in [0, 255].
GrayF to_gray(const Raster<Rgb8>& img);

}  // namespace oilbrush
