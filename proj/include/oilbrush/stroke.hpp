#pragma once

#include <numbers>

#include "oilbrush/color.hpp"
#include "oilbrush/etf.hpp"
#include "oilbrush/raster.hpp"

namespace oilbrush {

// One rectangular stroke: anchor, direction, the four extents measured from
// the anchor (l1 along theta, l2 along theta+pi, w1 along theta+pi/2, w2
// along theta-pi/2), and the anchor pixel's HSV color.
struct StrokeParams {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;
    HsvPixel color;
    double prob = 0.0;  // sampling probability the limits were derived from

    double area() const { return (l1 + l2) * (w1 + w2); }
};

// Extent clipping bounds from the anchor's sampling probability p: widths in
// [p_max^-1/2, p^-1/2], lengths three times that.
struct SearchLimits {
    double min_width = 0.0;
    double max_width = 0.0;
    double min_length = 0.0;
    double max_length = 0.0;

    static SearchLimits for_probability(double p, double p_max);
};

struct SearchOptions {
    double t_hue = std::numbers::pi / 3.0;
    double t_value = 15.0;
    double step = 1.0;
    bool circular_hue = true;  // false: literal |H - H0| as written in the paper
};

// Walk from the anchor along alpha in `step` increments, accumulating length
// while the visited pixel stays within the hue and value thresholds of the
// anchor pixel. The step onto the first failing (or out-of-bounds) point is
// included, so the result is at least one step.
double search_length(const Raster<HsvPixel>& hsv, double x0, double y0, double alpha,
                     const SearchOptions& opts = {});

// Full per-anchor stroke: direction from the field, four clipped extents,
// color read at the rounded anchor.
StrokeParams build_stroke(double x, double y, double p, const EtfField& etf,
                          const Raster<HsvPixel>& hsv, double p_max,
                          const SearchOptions& opts = {});

}  // namespace oilbrush
