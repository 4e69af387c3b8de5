#include "oilbrush/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace oilbrush {

namespace {
constexpr int kSmooth[5] = {1, 4, 6, 4, 1};
constexpr int kDeriv[5] = {-1, -2, 0, 2, 1};
}  // namespace

void sobel_xy(const GrayF& gray, GrayF& gx, GrayF& gy) {
    const int w = gray.width(), h = gray.height();
    gx = GrayF(w, h);
    gy = GrayF(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sx = 0.0, sy = 0.0;
            for (int j = -2; j <= 2; ++j) {
                for (int i = -2; i <= 2; ++i) {
                    const double v = gray.clamped(x + i, y + j);
                    sx += v * kDeriv[i + 2] * kSmooth[j + 2];
                    sy += v * kSmooth[i + 2] * kDeriv[j + 2];
                }
            }
            gx(x, y) = sx;
            gy(x, y) = sy;
        }
    }
}

GrayF sobel_gradient(const GrayF& gray) {
    GrayF gx, gy;
    sobel_xy(gray, gx, gy);
    GrayF out(gray.width(), gray.height());
    for (std::size_t i = 0; i < out.size(); ++i)
        out.pixels()[i] = std::hypot(gx.pixels()[i], gy.pixels()[i]);
    return out;
}

GrayF mean_filter(const GrayF& img, int window) {
    if (window < 1 || window % 2 == 0)
        throw std::invalid_argument("mean_filter window must be odd and >= 1");
    const int r = window / 2;
    const int w = img.width(), h = img.height();
    const double norm = 1.0 / (window * window);
    GrayF out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int j = -r; j <= r; ++j)
                for (int i = -r; i <= r; ++i)
                    s += img.clamped(x + i, y + j);
            out(x, y) = s * norm;
        }
    }
    return out;
}

}  // namespace oilbrush
