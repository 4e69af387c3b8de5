#include "oilbrush/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>

#include "oilbrush/image_io.hpp"

namespace oilbrush {

namespace {

// splitmix64; derives independent per-stage streams from the one user seed so
// changing an unrelated stage's settings does not perturb sampling.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void dump_density(const std::string& dir, const DensityMap& dm) {
    Raster<std::uint8_t> img(dm.probs.width(), dm.probs.height());
    for (std::size_t i = 0; i < img.size(); ++i)
        img.pixels()[i] = static_cast<std::uint8_t>(
            std::lround(std::clamp(dm.probs.pixels()[i] / dm.p_max * 255.0, 0.0, 255.0)));
    save_gray_png(dir + "/density.png", img);
}

void dump_anchors(const std::string& dir, const AnchorSet& anchors, int w, int h) {
    std::ofstream csv(dir + "/anchors.csv");
    csv << "x,y,p\n" << std::setprecision(12);
    for (int i = 0; i < anchors.k(); ++i)
        csv << anchors.anchors[i].x << ',' << anchors.anchors[i].y << ','
            << anchors.probs[i] << '\n';

    Raster<std::uint8_t> img(w, h, 255);
    for (const Anchor& a : anchors.anchors) {
        const int x = static_cast<int>(std::lround(a.x));
        const int y = static_cast<int>(std::lround(a.y));
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
                if (img.in_bounds(x + dx, y + dy)) img(x + dx, y + dy) = 0;
    }
    save_gray_png(dir + "/anchors.png", img);
}

void dump_etf(const std::string& dir, const EtfField& field) {
    const int w = field.angle.width(), h = field.angle.height();
    Raster<std::uint8_t> img(w, h, 255);
    const int grid = 8, half = 3;
    for (int y = grid / 2; y < h; y += grid) {
        for (int x = grid / 2; x < w; x += grid) {
            const double a = field.angle(x, y);
            const double c = std::cos(a), s = std::sin(a);
            for (int t = -half; t <= half; ++t) {
                const int px = static_cast<int>(std::lround(x + t * c));
                const int py = static_cast<int>(std::lround(y + t * s));
                if (img.in_bounds(px, py)) img(px, py) = 0;
            }
        }
    }
    save_gray_png(dir + "/etf.png", img);
}

void dump_strokes(const std::string& dir, const std::vector<StrokeParams>& strokes) {
    std::ofstream csv(dir + "/strokes.csv");
    csv << "x,y,theta,l1,l2,w1,w2,h,s,v\n" << std::setprecision(12);
    for (const StrokeParams& sp : strokes)
        csv << sp.x << ',' << sp.y << ',' << sp.theta << ',' << sp.l1 << ',' << sp.l2
            << ',' << sp.w1 << ',' << sp.w2 << ',' << sp.color.h << ',' << sp.color.s
            << ',' << sp.color.v << '\n';
}

}  // namespace

double PipelineConfig::level_to_p_max(int level) {
    if (level < 2 || level > 6)
        throw InvalidConfig("fineness level must be in 2..6");
    return 1.0 / (static_cast<double>(level) * level);
}

void PipelineConfig::validate() const {
    if (!(p_max > 0.0 && p_max <= 1.0)) throw InvalidConfig("p_max must be in (0, 1]");
    if (etf_radius < 1) throw InvalidConfig("etf-radius must be >= 1");
    if (etf_iterations < 0) throw InvalidConfig("etf-iters must be >= 0");
    if (lloyd_iterations < 0) throw InvalidConfig("lloyd-iters must be >= 0");
    if (max_padding_rounds < 0) throw InvalidConfig("padding rounds must be >= 0");
    if (!(t_hue > 0.0)) throw InvalidConfig("t_hue must be > 0");
    if (!(t_value > 0.0)) throw InvalidConfig("t_value must be > 0");
    if (progress_every < 0) throw InvalidConfig("progress interval must be >= 0");
}

RunSummary run(const PipelineConfig& config, const Raster<Rgb8>& input, Canvas& out) {
    config.validate();
    const auto t_start = std::chrono::steady_clock::now();
    const int w = input.width(), h = input.height();
    const bool dump = !config.dump_dir.empty();
    if (dump) std::filesystem::create_directories(config.dump_dir);

    const GrayF gray = to_gray(input);
    const Raster<HsvPixel> hsv = rgb_to_hsv(input);

    const DensityMap dm = build_density_map(gray, config.p_max);
    const int k = anchor_count(dm);
    if (dump) dump_density(config.dump_dir, dm);

    AnchorSet anchors = rejection_sample(dm, k, sub_seed(config.seed, 0));
    anchors = voronoi_relax(anchors, dm, config.lloyd_iterations);
    if (dump) dump_anchors(config.dump_dir, anchors, w, h);

    EtfField field;
    switch (config.direction_mode) {
        case DirectionMode::Etf:
            field = compute_etf(gray, config.etf_radius, config.etf_iterations);
            break;
        case DirectionMode::Constant:
            field = constant_field(w, h, config.constant_angle);
            break;
        case DirectionMode::Random:
            field = random_field(w, h, sub_seed(config.seed, 1));
            break;
    }
    if (dump) dump_etf(config.dump_dir, field);

    SearchOptions opts;
    opts.t_hue = config.t_hue;
    opts.t_value = config.t_value;
    opts.circular_hue = config.circular_hue;

    std::vector<StrokeParams> strokes;
    strokes.reserve(anchors.k());
    for (int i = 0; i < anchors.k(); ++i)
        strokes.push_back(build_stroke(anchors.anchors[i].x, anchors.anchors[i].y,
                                       anchors.probs[i], field, hsv, config.p_max, opts));
    if (dump) dump_strokes(config.dump_dir, strokes);

    const StrokeTemplate tpl = config.template_path.empty()
                                   ? StrokeTemplate::default_brush()
                                   : StrokeTemplate::load(config.template_path);

    PaintObserver observer;
    if (dump && config.progress_every > 0) {
        observer = [&config](int painted, const Canvas& canvas) {
            save_png(config.dump_dir + "/progress_" + std::to_string(painted) + ".png",
                     canvas.color);
        };
    }
    out = paint(strokes, tpl, w, h, config.progress_every, observer);

    const PaddingResult padding = pad_holes(out, input, hsv, dm, field, tpl,
                                            config.p_max, opts, config.max_padding_rounds);

    RunSummary summary;
    summary.width = w;
    summary.height = h;
    summary.k = k;
    summary.stroke_count = static_cast<int>(strokes.size()) + padding.strokes_added;
    summary.padding_rounds = padding.rounds;
    if (config.collect_strokes) {
        summary.strokes = std::move(strokes);
        summary.strokes.insert(summary.strokes.end(), padding.strokes.begin(),
                               padding.strokes.end());
    }
    summary.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return summary;
}

RunSummary run_file(const PipelineConfig& config, const std::string& input_path,
                    const std::string& output_path) {
    const Raster<Rgb8> input = load_rgb(input_path);
    Canvas canvas;
    RunSummary summary = run(config, input, canvas);
    save_png(output_path, canvas.color);
    return summary;
}

}  // namespace oilbrush
