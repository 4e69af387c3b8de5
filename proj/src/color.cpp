#include "oilbrush/color.hpp"

#include <cmath>
#include <numbers>

namespace oilbrush {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSextant = std::numbers::pi / 3.0;  // 60 degrees
}  // namespace

double circular_hue_distance(double a, double b) {
    double d = std::fabs(a - b);
    d = std::fmod(d, kTwoPi);
    return std::min(d, kTwoPi - d);
}

HsvPixel rgb_to_hsv(const Rgb8& c) {
    const double r = c.r, g = c.g, b = c.b;
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double delta = mx - mn;

    HsvPixel out;
    out.v = mx;
    out.s = (mx > 0.0) ? delta / mx : 0.0;
    if (delta > 0.0) {
        double h;
        if (mx == r)
            h = std::fmod((g - b) / delta + 6.0, 6.0);
        else if (mx == g)
            h = (b - r) / delta + 2.0;
        else
            h = (r - g) / delta + 4.0;
        out.h = h * kSextant;
        if (out.h >= kTwoPi) out.h = 0.0;
    }
    return out;
}

Rgb8 hsv_to_rgb(const HsvPixel& c) {
    const double v = c.v;
    if (c.s <= 0.0) {
        const auto u = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
        return {u, u, u};
    }
    double hp = c.h / kSextant;
    hp = std::fmod(hp, 6.0);
    if (hp < 0.0) hp += 6.0;
    const int sector = std::min(5, static_cast<int>(hp));
    const double f = hp - sector;
    const double p = v * (1.0 - c.s);
    const double q = v * (1.0 - c.s * f);
    const double t = v * (1.0 - c.s * (1.0 - f));

    double r, g, b;
    switch (sector) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
    auto to8 = [](double x) {
        return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 255.0)));
    };
    return {to8(r), to8(g), to8(b)};
}

Raster<HsvPixel> rgb_to_hsv(const Raster<Rgb8>& img) {
    Raster<HsvPixel> out(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i)
        out.pixels()[i] = rgb_to_hsv(img.pixels()[i]);
    return out;
}

GrayF to_gray(const Raster<Rgb8>& img) {
    GrayF out(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const Rgb8& c = img.pixels()[i];
        out.pixels()[i] = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
    }
    return out;
}

}  // namespace oilbrush
