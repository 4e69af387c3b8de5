#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oilbrush/color.hpp"
#include "oilbrush/density.hpp"
#include "oilbrush/etf.hpp"
#include "oilbrush/raster.hpp"
#include "oilbrush/stroke.hpp"

namespace oilbrush {

struct DegenerateStroke : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brush template: gray texture whose long axis is the drawing direction, a
// boolean foreground footprint, and the foreground's mean gray g_m.
struct StrokeTemplate {
    Raster<std::uint8_t> texture;
    Mask mask;
    double g_m = 0.0;

    // Grayscale+alpha PNG; alpha > 0 is the footprint.
    static StrokeTemplate load(const std::string& path);
    // Built-in procedural brush (also shipped as assets/brush.png).
    static StrokeTemplate default_brush();
};

// A rasterized stroke clipped to the canvas: local V-channel raster plus
// footprint, with constant hue and saturation, positioned at (x0, y0).
struct Stamp {
    int x0 = 0;
    int y0 = 0;
    Raster<float> value;
    Mask mask;
    double h = 0.0;
    double s = 0.0;
};

struct Canvas {
    Raster<Rgb8> color;
    Mask covered;

    Canvas() = default;
    Canvas(int w, int h)
        : color(w, h, Rgb8{255, 255, 255}), covered(w, h, 0) {}
};

// Resize the template to (l1+l2) x (w1+w2), recolor with the stroke's HSV
// (V = clamp(T * v / g_m)), rotate by theta about the anchor, clip to the
// canvas. Texture is resampled smoothly (area average then bilinear), the
// footprint with nearest neighbor so coverage stays boolean.
Stamp render_stroke(const StrokeParams& sp, const StrokeTemplate& tpl, int canvas_w,
                    int canvas_h);

void composite(Canvas& canvas, const Stamp& stamp);

using PaintObserver = std::function<void(int painted, const Canvas&)>;

// Stable area-descending compositing with opaque overwrite. The observer, if
// set, fires after every `observe_every` strokes.
Canvas paint(const std::vector<StrokeParams>& strokes, const StrokeTemplate& tpl,
             int width, int height, int observe_every = 0,
             const PaintObserver& observer = nullptr);

struct PaddingResult {
    int rounds = 0;
    int strokes_added = 0;
    std::vector<StrokeParams> strokes;
};

// Iteratively cover holes: centroids of uncovered 4-connected components
// become new anchors; their strokes are rendered on a blank canvas and copied
// only into still-uncovered pixels. After max_rounds any residue is filled
// from the source image, so the canvas always ends fully covered.
PaddingResult pad_holes(Canvas& canvas, const Raster<Rgb8>& source,
                        const Raster<HsvPixel>& hsv, const DensityMap& dm,
                        const EtfField& etf, const StrokeTemplate& tpl, double p_max,
                        const SearchOptions& opts = {}, int max_rounds = 10);

}  // namespace oilbrush
