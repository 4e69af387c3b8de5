#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "oilbrush/render.hpp"

namespace oilbrush {

struct InvalidConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DirectionMode { Etf, Constant, Random };

struct PipelineConfig {
    double p_max = 0.25;  // fineness level 2..6 maps to 1/level^2
    std::uint64_t seed = 0;
    int etf_radius = 5;
    int etf_iterations = 3;
    double t_hue = std::numbers::pi / 3.0;
    double t_value = 15.0;
    int lloyd_iterations = 15;
    int max_padding_rounds = 10;
    bool circular_hue = true;
    DirectionMode direction_mode = DirectionMode::Etf;
    double constant_angle = std::numbers::pi / 4.0;
    std::string template_path;   // empty: built-in brush
    std::string dump_dir;        // empty: no intermediate dumps
    int progress_every = 0;      // dump progress_<i>.png every N strokes
    bool collect_strokes = false;

    static double level_to_p_max(int level);
    void validate() const;
};

struct RunSummary {
    int width = 0;
    int height = 0;
    int k = 0;              // sampled anchors
    int stroke_count = 0;   // anchors + padding strokes
    int padding_rounds = 0;
    double seconds = 0.0;
    std::vector<StrokeParams> strokes;  // filled when collect_strokes is set
};

RunSummary run(const PipelineConfig& config, const Raster<Rgb8>& input, Canvas& out);

RunSummary run_file(const PipelineConfig& config, const std::string& input_path,
                    const std::string& output_path);

}  // namespace oilbrush
