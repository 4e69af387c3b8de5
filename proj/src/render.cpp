#include "oilbrush/render.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oilbrush/components.hpp"
#include "oilbrush/image_io.hpp"

namespace oilbrush {

namespace {

double foreground_mean(const Raster<std::uint8_t>& texture, const Mask& mask) {
    double sum = 0.0;
    long long n = 0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask.pixels()[i]) {
            sum += texture.pixels()[i];
            ++n;
        }
    }
    if (n == 0) throw std::invalid_argument("stroke template has an empty footprint");
    return sum / static_cast<double>(n);
}

// Fractional box filter over the template's foreground; background pixels
// contribute the neutral value g_m so mask edges do not darken the stamp.
Raster<float> resize_texture(const StrokeTemplate& tpl, int tw, int th) {
    const int sw = tpl.texture.width(), sh = tpl.texture.height();
    Raster<float> out(tw, th);
    const double sx = static_cast<double>(sw) / tw;
    const double sy = static_cast<double>(sh) / th;
    for (int j = 0; j < th; ++j) {
        const double y0 = j * sy, y1 = (j + 1) * sy;
        const int iy0 = static_cast<int>(y0);
        const int iy1 = std::min(sh - 1, static_cast<int>(std::ceil(y1)) - 1);
        for (int i = 0; i < tw; ++i) {
            const double x0 = i * sx, x1 = (i + 1) * sx;
            const int ix0 = static_cast<int>(x0);
            const int ix1 = std::min(sw - 1, static_cast<int>(std::ceil(x1)) - 1);
            double acc = 0.0, wsum = 0.0;
            for (int yy = iy0; yy <= iy1; ++yy) {
                const double wy = std::min<double>(yy + 1, y1) - std::max<double>(yy, y0);
                for (int xx = ix0; xx <= ix1; ++xx) {
                    const double wx =
                        std::min<double>(xx + 1, x1) - std::max<double>(xx, x0);
                    const double w = wx * wy;
                    const double t =
                        tpl.mask(xx, yy) ? tpl.texture(xx, yy) : tpl.g_m;
                    acc += w * t;
                    wsum += w;
                }
            }
            out(i, j) = static_cast<float>(wsum > 0.0 ? acc / wsum : tpl.g_m);
        }
    }
    return out;
}

float bilinear(const Raster<float>& img, double x, double y) {
    x = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
    y = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
    const int x0 = static_cast<int>(x);
    const int y0 = static_cast<int>(y);
    const int x1 = std::min(x0 + 1, img.width() - 1);
    const int y1 = std::min(y0 + 1, img.height() - 1);
    const double fx = x - x0, fy = y - y0;
    const double a = img(x0, y0) * (1.0 - fx) + img(x1, y0) * fx;
    const double b = img(x0, y1) * (1.0 - fx) + img(x1, y1) * fx;
    return static_cast<float>(a * (1.0 - fy) + b * fy);
}

}  // namespace

StrokeTemplate StrokeTemplate::load(const std::string& path) {
    Raster<std::uint8_t> gray, alpha;
    load_gray_alpha(path, gray, alpha);
    StrokeTemplate tpl;
    tpl.texture = std::move(gray);
    tpl.mask = Mask(tpl.texture.width(), tpl.texture.height(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        tpl.mask.pixels()[i] = alpha.pixels()[i] > 0 ? 1 : 0;
    tpl.g_m = foreground_mean(tpl.texture, tpl.mask);
    if (tpl.g_m <= 0.0)
        throw std::invalid_argument("stroke template foreground mean must be > 0");
    return tpl;
}

StrokeTemplate StrokeTemplate::default_brush() {
    const int w = 300, h = 100;
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
    const double a = 142.0, b = 42.0;

    StrokeTemplate tpl;
    tpl.texture = Raster<std::uint8_t>(w, h, 0);
    tpl.mask = Mask(w, h, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double nx = (x - cx) / a;
            const double ny = (y - cy) / b;
            const double phi = std::atan2(ny, nx);
            // Wavy superellipse footprint, irregular like a real bristle edge.
            const double wobble =
                1.0 + 0.055 * std::sin(3.0 * phi + 1.3) + 0.04 * std::sin(7.0 * phi + 0.4);
            const double r = std::pow(std::pow(std::fabs(nx), 4.0) +
                                          std::pow(std::fabs(ny), 4.0),
                                      0.25);
            if (r >= wobble) continue;
            tpl.mask(x, y) = 1;
            // Longitudinal streaks with a mild taper toward the stroke tips.
            double t = 234.0 + 12.0 * std::sin(0.55 * y + 1.7 * std::sin(0.035 * x)) +
                       6.0 * std::sin(0.9 * y + 2.0);
            t -= 22.0 * std::max(0.0, std::fabs(nx) - 0.8) / 0.2;
            tpl.texture(x, y) =
                static_cast<std::uint8_t>(std::lround(std::clamp(t, 190.0, 255.0)));
        }
    }
    tpl.g_m = foreground_mean(tpl.texture, tpl.mask);
    return tpl;
}

Stamp render_stroke(const StrokeParams& sp, const StrokeTemplate& tpl, int canvas_w,
                    int canvas_h) {
    const double len = sp.l1 + sp.l2;
    const double wid = sp.w1 + sp.w2;
    const int tw = static_cast<int>(std::lround(len));
    const int th = static_cast<int>(std::lround(wid));
    if (tw < 1 || th < 1)
        throw DegenerateStroke("stroke resizes to an empty raster");

    const Raster<float> tex = resize_texture(tpl, tw, th);
    const double c = std::cos(sp.theta), s = std::sin(sp.theta);

    // Bounding box of the rotated rectangle, clipped to the canvas.
    double minx = sp.x, maxx = sp.x, miny = sp.y, maxy = sp.y;
    for (const double u : {-sp.l2, sp.l1}) {
        for (const double v : {-sp.w2, sp.w1}) {
            const double px = sp.x + u * c - v * s;
            const double py = sp.y + u * s + v * c;
            minx = std::min(minx, px);
            maxx = std::max(maxx, px);
            miny = std::min(miny, py);
            maxy = std::max(maxy, py);
        }
    }
    const int bx0 = std::max(0, static_cast<int>(std::floor(minx)));
    const int by0 = std::max(0, static_cast<int>(std::floor(miny)));
    const int bx1 = std::min(canvas_w - 1, static_cast<int>(std::ceil(maxx)));
    const int by1 = std::min(canvas_h - 1, static_cast<int>(std::ceil(maxy)));

    Stamp stamp;
    stamp.h = sp.color.h;
    stamp.s = sp.color.s;
    stamp.x0 = bx0;
    stamp.y0 = by0;
    if (bx1 < bx0 || by1 < by0) return stamp;  // fully off canvas

    const int bw = bx1 - bx0 + 1, bh = by1 - by0 + 1;
    stamp.value = Raster<float>(bw, bh, 0.0f);
    stamp.mask = Mask(bw, bh, 0);

    const int mw = tpl.mask.width(), mh = tpl.mask.height();
    const double vscale = sp.color.v / tpl.g_m;
    for (int py = by0; py <= by1; ++py) {
        for (int px = bx0; px <= bx1; ++px) {
            const double dx = px - sp.x, dy = py - sp.y;
            const double u = dx * c + dy * s;
            const double v = -dx * s + dy * c;
            if (u < -sp.l2 || u > sp.l1 || v < -sp.w2 || v > sp.w1) continue;
            const double fu = (u + sp.l2) / len;  // [0, 1] along the long axis
            const double fv = (v + sp.w2) / wid;
            const int mx = std::clamp(static_cast<int>(fu * mw), 0, mw - 1);
            const int my = std::clamp(static_cast<int>(fv * mh), 0, mh - 1);
            if (!tpl.mask(mx, my)) continue;
            const float t = bilinear(tex, fu * tw - 0.5, fv * th - 0.5);
            stamp.mask(px - bx0, py - by0) = 1;
            stamp.value(px - bx0, py - by0) =
                static_cast<float>(std::clamp(t * vscale, 0.0, 255.0));
        }
    }
    return stamp;
}

void composite(Canvas& canvas, const Stamp& stamp) {
    if (stamp.mask.size() == 0) return;
    for (int y = 0; y < stamp.mask.height(); ++y) {
        for (int x = 0; x < stamp.mask.width(); ++x) {
            if (!stamp.mask(x, y)) continue;
            const int cx = stamp.x0 + x, cy = stamp.y0 + y;
            canvas.color(cx, cy) = hsv_to_rgb({stamp.h, stamp.s, stamp.value(x, y)});
            canvas.covered(cx, cy) = 1;
        }
    }
}

Canvas paint(const std::vector<StrokeParams>& strokes, const StrokeTemplate& tpl,
             int width, int height, int observe_every, const PaintObserver& observer) {
    std::vector<std::size_t> order(strokes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return strokes[a].area() > strokes[b].area();
    });

    Canvas canvas(width, height);
    int painted = 0;
    for (std::size_t idx : order) {
        composite(canvas, render_stroke(strokes[idx], tpl, width, height));
        ++painted;
        if (observer && observe_every > 0 && painted % observe_every == 0)
            observer(painted, canvas);
    }
    return canvas;
}

PaddingResult pad_holes(Canvas& canvas, const Raster<Rgb8>& source,
                        const Raster<HsvPixel>& hsv, const DensityMap& dm,
                        const EtfField& etf, const StrokeTemplate& tpl, double p_max,
                        const SearchOptions& opts, int max_rounds) {
    const int w = canvas.color.width(), h = canvas.color.height();
    PaddingResult result;

    for (int round = 0; round < max_rounds; ++round) {
        Mask holes(w, h, 0);
        bool any = false;
        for (std::size_t i = 0; i < holes.size(); ++i) {
            if (!canvas.covered.pixels()[i]) {
                holes.pixels()[i] = 1;
                any = true;
            }
        }
        if (!any) break;

        const auto comps = connected_components(holes);
        std::vector<StrokeParams> strokes;
        strokes.reserve(comps.size());
        for (const Component& comp : comps) {
            const int cx = std::clamp(comp.cx, 0, w - 1);
            const int cy = std::clamp(comp.cy, 0, h - 1);
            strokes.push_back(
                build_stroke(cx, cy, dm.probs(cx, cy), etf, hsv, p_max, opts));
        }

        // The round's strokes are rendered on their own blank canvas and
        // copied only into pixels the main canvas has not painted yet.
        const Canvas padding = paint(strokes, tpl, w, h);
        long long newly_covered = 0;
        for (std::size_t i = 0; i < canvas.covered.size(); ++i) {
            if (!canvas.covered.pixels()[i] && padding.covered.pixels()[i]) {
                canvas.color.pixels()[i] = padding.color.pixels()[i];
                canvas.covered.pixels()[i] = 1;
                ++newly_covered;
            }
        }
        result.rounds += 1;
        result.strokes_added += static_cast<int>(strokes.size());
        result.strokes.insert(result.strokes.end(), strokes.begin(), strokes.end());
        // A zero-progress round is a fixed point: every further round would
        // repeat it exactly, so skip straight to the fallback.
        if (newly_covered == 0) break;
    }

    // Unconditional fallback: any residue takes the source image's colors.
    for (std::size_t i = 0; i < canvas.covered.size(); ++i) {
        if (!canvas.covered.pixels()[i]) {
            canvas.color.pixels()[i] = source.pixels()[i];
            canvas.covered.pixels()[i] = 1;
        }
    }
    return result;
}

}  // namespace oilbrush
