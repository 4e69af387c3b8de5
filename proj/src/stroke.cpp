#include "oilbrush/stroke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oilbrush {

SearchLimits SearchLimits::for_probability(double p, double p_max) {
    if (!(p > 0.0 && p_max > 0.0 && p <= p_max))
        throw std::invalid_argument("SearchLimits: need 0 < p <= p_max");
    SearchLimits lim;
    lim.min_width = 1.0 / std::sqrt(p_max);
    lim.max_width = 1.0 / std::sqrt(p);
    lim.min_length = 3.0 * lim.min_width;
    lim.max_length = 3.0 * lim.max_width;
    return lim;
}

double search_length(const Raster<HsvPixel>& hsv, double x0, double y0, double alpha,
                     const SearchOptions& opts) {
    const int ax = static_cast<int>(std::lround(x0));
    const int ay = static_cast<int>(std::lround(y0));
    const HsvPixel origin = hsv.at(ax, ay);

    const double dx = opts.step * std::cos(alpha);
    const double dy = opts.step * std::sin(alpha);

    long long steps = 0;
    while (true) {
        ++steps;
        const double cx = x0 + steps * dx;
        const double cy = y0 + steps * dy;
        const int px = static_cast<int>(std::lround(cx));
        const int py = static_cast<int>(std::lround(cy));
        if (!hsv.in_bounds(px, py)) break;
        const HsvPixel& q = hsv(px, py);
        const double dh = opts.circular_hue ? circular_hue_distance(q.h, origin.h)
                                            : std::fabs(q.h - origin.h);
        if (!(dh < opts.t_hue && std::fabs(q.v - origin.v) < opts.t_value)) break;
    }
    return steps * opts.step;
}

StrokeParams build_stroke(double x, double y, double p, const EtfField& etf,
                          const Raster<HsvPixel>& hsv, double p_max,
                          const SearchOptions& opts) {
    const SearchLimits lim = SearchLimits::for_probability(p, p_max);
    const double theta = direction_at(etf, x, y);
    constexpr double half_pi = std::numbers::pi / 2.0;

    StrokeParams sp;
    sp.x = x;
    sp.y = y;
    sp.theta = theta;
    sp.prob = p;
    sp.l1 = std::clamp(search_length(hsv, x, y, theta, opts), lim.min_length, lim.max_length);
    sp.l2 = std::clamp(search_length(hsv, x, y, theta + std::numbers::pi, opts),
                       lim.min_length, lim.max_length);
    sp.w1 = std::clamp(search_length(hsv, x, y, theta + half_pi, opts), lim.min_width,
                       lim.max_width);
    sp.w2 = std::clamp(search_length(hsv, x, y, theta - half_pi, opts), lim.min_width,
                       lim.max_width);
    sp.color = hsv.at(static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y)));
    return sp;
}

}  // namespace oilbrush
