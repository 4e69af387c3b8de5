#include <cstdio>
#include <exception>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "oilbrush/image_io.hpp"
#include "oilbrush/pipeline.hpp"

namespace {

constexpr int kExitUnreadable = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInvalidConfig = 4;
constexpr int kExitWriteFailure = 5;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oilbrush: turn a photograph into an oil-painting-style image"};

    std::string input_path, output_path, template_path, dump_dir, direction = "etf";
    std::string write_template;
    double p_max = 0.0;
    int level = 0;
    oilbrush::PipelineConfig config;
    std::uint64_t seed = 0;
    int progress_every = 0;

    app.add_option("--input", input_path, "Input image (PNG or JPEG)");
    app.add_option("--output", output_path, "Output PNG path");
    auto* opt_pmax =
        app.add_option("--p-max", p_max, "Maximum sampling probability in (0, 1]");
    auto* opt_level =
        app.add_option("--level", level, "Fineness level 2..6 (p_max = 1/level^2)")
            ->check(CLI::Range(2, 6));
    opt_level->excludes(opt_pmax);
    app.add_option("--seed", seed, "Random seed (default 0)");
    app.add_option("--template", template_path, "Brush template PNG (gray+alpha)");
    app.add_option("--etf-radius", config.etf_radius, "ETF smoothing radius in pixels");
    app.add_option("--etf-iters", config.etf_iterations, "ETF smoothing passes");
    app.add_option("--lloyd-iters", config.lloyd_iterations, "Voronoi relaxation iterations");
    app.add_option("--direction", direction,
                   "Stroke direction source: etf | constant:<deg> | random");
    app.add_option("--dump-intermediates", dump_dir,
                   "Directory for density/anchors/etf/strokes dumps");
    app.add_option("--progress-every", progress_every,
                   "With --dump-intermediates: write progress_<i>.png every N strokes");
    app.add_flag("--literal-hue-distance", "Use the plain |H - H0| difference instead of "
                                           "circular hue distance during length search");
    app.add_option("--write-default-template", write_template,
                   "Write the built-in brush template PNG to this path and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!write_template.empty()) {
            const auto tpl = oilbrush::StrokeTemplate::default_brush();
            oilbrush::Raster<std::uint8_t> alpha(tpl.mask.width(), tpl.mask.height());
            for (std::size_t i = 0; i < tpl.mask.size(); ++i)
                alpha.pixels()[i] = tpl.mask.pixels()[i] ? 255 : 0;
            oilbrush::save_gray_alpha_png(write_template, tpl.texture, alpha);
            std::printf("wrote %s\n", write_template.c_str());
            return 0;
        }

        if (input_path.empty() || output_path.empty()) {
            std::fprintf(stderr, "error: --input and --output are required\n");
            return kExitInvalidConfig;
        }

        if (opt_level->count())
            config.p_max = oilbrush::PipelineConfig::level_to_p_max(level);
        else if (opt_pmax->count())
            config.p_max = p_max;

        config.seed = seed;
        config.template_path = template_path;
        config.dump_dir = dump_dir;
        config.progress_every = progress_every;
        config.circular_hue = app.count("--literal-hue-distance") == 0;

        if (direction == "etf") {
            config.direction_mode = oilbrush::DirectionMode::Etf;
        } else if (direction == "random") {
            config.direction_mode = oilbrush::DirectionMode::Random;
        } else if (direction.rfind("constant:", 0) == 0) {
            config.direction_mode = oilbrush::DirectionMode::Constant;
            config.constant_angle =
                std::stod(direction.substr(9)) * std::numbers::pi / 180.0;
        } else {
            std::fprintf(stderr, "error: unknown --direction '%s'\n", direction.c_str());
            return kExitInvalidConfig;
        }

        const oilbrush::RunSummary s =
            oilbrush::run_file(config, input_path, output_path);
        std::printf("%dx%d  K=%d  strokes=%d  padding_rounds=%d  %.2fs\n", s.width,
                    s.height, s.k, s.stroke_count, s.padding_rounds, s.seconds);
        return 0;
    } catch (const oilbrush::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.kind) {
            case oilbrush::IoError::Kind::Unreadable: return kExitUnreadable;
            case oilbrush::IoError::Kind::UnsupportedFormat: return kExitUnsupported;
            case oilbrush::IoError::Kind::WriteFailure: return kExitWriteFailure;
        }
        return 1;
    } catch (const oilbrush::InvalidConfig& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
