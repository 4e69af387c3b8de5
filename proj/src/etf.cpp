#include "oilbrush/etf.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "oilbrush/filters.hpp"

namespace oilbrush {

double canonical_angle(double a) {
    a = std::fmod(a, std::numbers::pi);
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a = 0.0;
    return a;
}

EtfField compute_etf(const GrayF& gray, int radius, int iterations) {
    if (radius < 1) throw std::invalid_argument("compute_etf: radius must be >= 1");
    if (iterations < 0) throw std::invalid_argument("compute_etf: iterations must be >= 0");

    const int w = gray.width(), h = gray.height();
    GrayF gx, gy;
    sobel_xy(gray, gx, gy);

    EtfField field;
    field.modulus = GrayF(w, h);
    field.angle = GrayF(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            field.modulus(x, y) = std::hypot(gx(x, y), gy(x, y));
            field.angle(x, y) =
                canonical_angle(std::atan2(gy(x, y), gx(x, y)) + std::numbers::pi / 2.0);
        }
    }

    GrayF next(w, h);
    for (int pass = 0; pass < iterations; ++pass) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                double sx = 0.0, sy = 0.0;
                for (int j = -radius; j <= radius; ++j) {
                    for (int i = -radius; i <= radius; ++i) {
                        const int nx = x + i, ny = y + j;
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                        const double wt = field.modulus(nx, ny);
                        if (wt <= 0.0) continue;
                        const double a2 = 2.0 * field.angle(nx, ny);
                        sx += wt * std::cos(a2);
                        sy += wt * std::sin(a2);
                    }
                }
                if (sx * sx + sy * sy > 1e-24)
                    next(x, y) = canonical_angle(0.5 * std::atan2(sy, sx));
                else
                    next(x, y) = field.angle(x, y);  // no usable neighbors
            }
        }
        std::swap(field.angle, next);
    }
    return field;
}

double direction_at(const EtfField& field, double x, double y) {
    const int px = static_cast<int>(std::lround(x));
    const int py = static_cast<int>(std::lround(y));
    return field.angle.at(px, py);
}

EtfField constant_field(int width, int height, double angle) {
    EtfField f;
    f.angle = GrayF(width, height, canonical_angle(angle));
    f.modulus = GrayF(width, height, 1.0);
    return f;
}

EtfField random_field(int width, int height, std::uint64_t seed) {
    EtfField f;
    f.angle = GrayF(width, height);
    f.modulus = GrayF(width, height, 1.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, std::numbers::pi);
    for (auto& a : f.angle.pixels()) a = canonical_angle(dist(rng));
    return f;
}

}  // namespace oilbrush
