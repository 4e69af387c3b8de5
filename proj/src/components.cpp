#include "oilbrush/components.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace oilbrush {

std::vector<Component> connected_components(const Mask& mask) {
    const int w = mask.width(), h = mask.height();
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::vector<Component> out;
    std::vector<std::pair<int, int>> stack;

    for (int y0 = 0; y0 < h; ++y0) {
        for (int x0 = 0; x0 < w; ++x0) {
            const std::size_t i0 = static_cast<std::size_t>(y0) * w + x0;
            if (!mask.pixels()[i0] || seen[i0]) continue;

            long long sx = 0, sy = 0;
            int count = 0;
            seen[i0] = 1;
            stack.clear();
            stack.emplace_back(x0, y0);
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                sx += x;
                sy += y;
                ++count;
                constexpr int dx[4] = {1, -1, 0, 0};
                constexpr int dy[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int nx = x + dx[d], ny = y + dy[d];
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    const std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
                    if (mask.pixels()[ni] && !seen[ni]) {
                        seen[ni] = 1;
                        stack.emplace_back(nx, ny);
                    }
                }
            }
            Component c;
            c.size = count;
            c.cx = static_cast<int>(std::llround(static_cast<double>(sx) / count));
            c.cy = static_cast<int>(std::llround(static_cast<double>(sy) / count));
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace oilbrush
