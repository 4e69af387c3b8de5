// End-to-end acceptance suite. Each check prints one PASS/FAIL line; the
// process exits nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "oilbrush/color.hpp"
#include "oilbrush/density.hpp"
#include "oilbrush/etf.hpp"
#include "oilbrush/image_io.hpp"
#include "oilbrush/pipeline.hpp"
#include "oilbrush/render.hpp"
#include "oilbrush/stroke.hpp"
#include "test_support.hpp"

using namespace oilbrush;
namespace ts = oilbrush::testsupport;

namespace {

int g_failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int criterion, const char* name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("%s  criterion %2d  %-28s  %6.2fs  %s\n", ok ? "PASS" : "FAIL",
                criterion, name, seconds, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// 1. K(1/4)/K(1/16) = 4 +- 2% and K(1/4)/K(1/36) = 9 +- 2% on a 512x512 image.
void criterion_anchor_count_law() {
    Timer t;
    const GrayF gray = to_gray(ts::make_scene_rgb(512, 512, 1001));
    const int k4 = anchor_count(build_density_map(gray, 1.0 / 4.0));
    const int k16 = anchor_count(build_density_map(gray, 1.0 / 16.0));
    const int k36 = anchor_count(build_density_map(gray, 1.0 / 36.0));
    const double r4 = static_cast<double>(k4) / k16;
    const double r9 = static_cast<double>(k4) / k36;
    const bool ok = std::fabs(r4 - 4.0) <= 0.08 && std::fabs(r9 - 9.0) <= 0.18 &&
                    t.seconds() < 5.0;
    report(1, "anchor-count law", ok, t.seconds(),
           fmt("K=%d ratios %.4f %.4f", k4, r4, r9));
}

// 2. Lloyd energy non-increasing at every iteration, 20 random 128x128 maps.
void criterion_lloyd_monotonicity() {
    Timer t;
    std::mt19937_64 rng(2002);
    int violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dk(50, 500);
        const int target_k = dk(rng);
        DensityMap dm;
        dm.p_max = std::min(1.0, 2.0 * target_k / (128.0 * 128.0));
        dm.p_min = dm.p_max / 100.0;
        dm.probs = GrayF(128, 128);
        std::uniform_real_distribution<double> dp(dm.p_min, dm.p_max);
        for (auto& v : dm.probs.pixels()) v = dp(rng);

        const int k = anchor_count(dm);
        AnchorSet a = rejection_sample(dm, k, rng());
        RelaxStats stats;
        voronoi_relax(a, dm, 15, &stats);
        for (std::size_t i = 1; i < stats.energy.size(); ++i)
            if (stats.energy[i] > stats.energy[i - 1] + 1e-9 * stats.energy[0])
                ++violations;
    }
    const bool ok = violations == 0 && t.seconds() < 30.0;
    report(2, "lloyd monotonicity", ok, t.seconds(), fmt("violations=%d", violations));
}

// 3. Two-region map: sampled left/right counts within 3 sigma of the 100:1
//    binomial prediction, pooled over 10 seeds.
void criterion_sampling_fidelity() {
    Timer t;
    const int w = 128, h = 128;
    const double p_max = 0.1;
    DensityMap dm;
    dm.p_max = p_max;
    dm.p_min = p_max / 100.0;
    dm.probs = GrayF(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) dm.probs(x, y) = x < w / 2 ? p_max : dm.p_min;

    const int k = anchor_count(dm);
    const double mass_left = (w / 2) * h * p_max;
    const double mass_right = (w / 2) * h * dm.p_min;
    const double p_right = mass_right / (mass_left + mass_right);

    long long right_total = 0;
    const int seeds = 10;
    for (int s = 0; s < seeds; ++s) {
        const AnchorSet a = rejection_sample(dm, k, 3000 + s);
        for (const Anchor& an : a.anchors)
            if (an.x >= w / 2) ++right_total;
    }
    const double n = static_cast<double>(k) * seeds;
    const double mu = n * p_right;
    const double sigma = std::sqrt(n * p_right * (1.0 - p_right));
    const double dev = std::fabs(right_total - mu) / sigma;
    const bool ok = dev <= 3.0 && t.seconds() < 10.0;
    report(3, "sampling fidelity", ok, t.seconds(),
           fmt("right=%lld expected=%.1f dev=%.2fsigma", right_total, mu, dev));
}

// 4. Concentric-circles ETF: >= 95% of pixels with r > 10 within 5 degrees of
//    the analytic tangent.
void criterion_etf_correctness() {
    Timer t;
    const int n = 257;
    const GrayF cone = ts::make_cone(n);
    const EtfField f = compute_etf(cone, 5, 3);
    const double c = (n - 1) / 2.0;
    long long checked = 0, ok_px = 0;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double r = std::hypot(x - c, y - c);
            if (r <= 10.0) continue;
            const double expected =
                canonical_angle(std::atan2(y - c, x - c) + std::numbers::pi / 2.0);
            double d = std::fabs(canonical_angle(f.angle(x, y)) - expected);
            d = std::min(d, std::numbers::pi - d);
            ++checked;
            if (d < 5.0 * std::numbers::pi / 180.0) ++ok_px;
        }
    }
    const double frac = static_cast<double>(ok_px) / checked;
    const bool ok = frac >= 0.95 && t.seconds() < 5.0;
    report(4, "etf correctness", ok, t.seconds(), fmt("within 5deg: %.2f%%", 100 * frac));
}

// 5. search_length equals the brute-force walk oracle exactly, 1000 anchors
//    on each of 3 synthetic images.
void criterion_search_oracle() {
    Timer t;
    const std::vector<Raster<Rgb8>> images = {
        ts::make_step_rgb(96, 96, 48),
        ts::make_scene_rgb(96, 96, 4001),
        ts::make_scene_rgb(96, 96, 4002),
    };
    std::mt19937_64 rng(4003);
    std::uniform_real_distribution<double> dc(1.0, 94.0);
    std::uniform_real_distribution<double> da(0.0, 2.0 * std::numbers::pi);
    long long mismatches = 0;
    for (const auto& img : images) {
        const auto hsv = rgb_to_hsv(img);
        for (int i = 0; i < 1000; ++i) {
            const double x = dc(rng), y = dc(rng), a = da(rng);
            const double got = search_length(hsv, x, y, a);
            const double want =
                ts::walk_oracle(hsv, x, y, a, std::numbers::pi / 3.0, 15.0, 1.0, true);
            if (got != want) ++mismatches;
        }
    }
    const bool ok = mismatches == 0 && t.seconds() < 10.0;
    report(5, "search oracle equivalence", ok, t.seconds(),
           fmt("mismatches=%lld/3000", mismatches));
}

// 6. |mean(stamp V over mask) - v| <= 2 over 500 random strokes.
void criterion_v_mean_preservation() {
    Timer t;
    const StrokeTemplate tpl = StrokeTemplate::default_brush();
    std::mt19937_64 rng(6001);
    std::uniform_real_distribution<double> dl(3.0, 45.0), dw(2.0, 15.0);
    std::uniform_real_distribution<double> dth(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> dv(15.0, 215.0);
    std::uniform_real_distribution<double> dh(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> ds(0.0, 1.0);
    double worst = 0.0;
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        StrokeParams sp;
        sp.x = 128;
        sp.y = 128;
        sp.theta = dth(rng);
        sp.l1 = dl(rng);
        sp.l2 = dl(rng);
        sp.w1 = dw(rng);
        sp.w2 = dw(rng);
        sp.color = {dh(rng), ds(rng), dv(rng)};
        const Stamp st = render_stroke(sp, tpl, 256, 256);
        double sum = 0.0;
        long long npx = 0;
        for (int y = 0; y < st.mask.height(); ++y)
            for (int x = 0; x < st.mask.width(); ++x)
                if (st.mask(x, y)) {
                    sum += st.value(x, y);
                    ++npx;
                }
        const double err = std::fabs(sum / npx - sp.color.v);
        worst = std::max(worst, err);
        if (err > 2.0) ++bad;
    }
    const bool ok = bad == 0 && t.seconds() < 10.0;
    report(6, "V-mean preservation", ok, t.seconds(),
           fmt("worst |mean-v|=%.3f, violations=%d/500", worst, bad));
}

// 7. Full pipeline at the five fineness levels: every extent inside its
//    [L_min, L_max] and the minimum width equals p_max^-1/2 exactly.
void criterion_extent_clamping() {
    Timer t;
    const auto img = ts::make_scene_rgb(256, 256, 7001);
    bool ok = true;
    std::string detail;
    for (int level = 2; level <= 6; ++level) {
        PipelineConfig config;
        config.p_max = PipelineConfig::level_to_p_max(level);
        config.seed = 7;
        config.collect_strokes = true;
        Canvas canvas;
        const RunSummary s = run(config, img, canvas);

        int violations = 0;
        double min_width = 1e300;
        for (const StrokeParams& sp : s.strokes) {
            const SearchLimits lim = SearchLimits::for_probability(sp.prob, config.p_max);
            if (sp.l1 < lim.min_length || sp.l1 > lim.max_length ||
                sp.l2 < lim.min_length || sp.l2 > lim.max_length ||
                sp.w1 < lim.min_width || sp.w1 > lim.max_width ||
                sp.w2 < lim.min_width || sp.w2 > lim.max_width)
                ++violations;
            min_width = std::min({min_width, sp.w1, sp.w2});
        }
        const double expected_min = 1.0 / std::sqrt(config.p_max);
        if (violations != 0 || min_width != expected_min) {
            ok = false;
            detail += fmt("[level %d: viol=%d minw=%.6f want %.6f]", level, violations,
                          min_width, expected_min);
        }
    }
    if (detail.empty()) detail = "all levels clamped, min width exact";
    report(7, "extent clamping", ok, t.seconds(), detail);
}

// 8. 10-image corpus x 5 levels: zero uncovered pixels, padding rounds <= 10;
//    the median round count is reported against the expected ~3.
void criterion_full_coverage() {
    Timer t;
    int uncovered_runs = 0, max_rounds = 0;
    std::vector<int> rounds;
    for (int image = 0; image < 10; ++image) {
        const auto img = ts::make_scene_rgb(128, 128, 8000 + image);
        for (int level = 2; level <= 6; ++level) {
            PipelineConfig config;
            config.p_max = PipelineConfig::level_to_p_max(level);
            config.seed = 100 + image;
            Canvas canvas;
            const RunSummary s = run(config, img, canvas);
            for (auto v : canvas.covered.pixels())
                if (!v) {
                    ++uncovered_runs;
                    break;
                }
            rounds.push_back(s.padding_rounds);
            max_rounds = std::max(max_rounds, s.padding_rounds);
        }
    }
    std::sort(rounds.begin(), rounds.end());
    const int median = rounds[rounds.size() / 2];
    const bool ok = uncovered_runs == 0 && max_rounds <= 10;
    report(8, "full coverage", ok, t.seconds(),
           fmt("uncovered runs=%d max rounds=%d median rounds=%d (soft target <=3)",
               uncovered_runs, max_rounds, median));
}

// 9. Identical config+seed => byte-identical output PNGs.
void criterion_determinism() {
    Timer t;
    bool ok = true;
    for (int image = 0; image < 3; ++image) {
        const auto img = ts::make_scene_rgb(96, 96, 9000 + image);
        const std::string in = fmt("acc_det_in_%d.png", image);
        save_png(in, img);
        PipelineConfig config;
        config.seed = 9;
        run_file(config, in, "acc_det_a.png");
        run_file(config, in, "acc_det_b.png");
        std::ifstream fa("acc_det_a.png", std::ios::binary);
        std::ifstream fb("acc_det_b.png", std::ios::binary);
        const std::string a{std::istreambuf_iterator<char>(fa),
                            std::istreambuf_iterator<char>()};
        const std::string b{std::istreambuf_iterator<char>(fb),
                            std::istreambuf_iterator<char>()};
        if (a.empty() || a != b) ok = false;
    }
    report(9, "determinism", ok, t.seconds(), "3 corpus images, 2 runs each");
}

// 10. 512x512 at p_max = 1/4 completes under 60 s single-threaded.
void criterion_performance() {
    Timer t;
    const auto img = ts::make_scene_rgb(512, 512, 10001);
    PipelineConfig config;
    config.p_max = 0.25;
    config.seed = 10;
    Canvas canvas;
    const RunSummary s = run(config, img, canvas);
    const bool ok = s.seconds < 60.0;
    report(10, "desk-scale performance", ok, t.seconds(),
           fmt("K=%d strokes=%d run=%.2fs", s.k, s.stroke_count, s.seconds));
}

}  // namespace

int main() {
    criterion_anchor_count_law();
    criterion_lloyd_monotonicity();
    criterion_sampling_fidelity();
    criterion_etf_correctness();
    criterion_search_oracle();
    criterion_v_mean_preservation();
    criterion_extent_clamping();
    criterion_full_coverage();
    criterion_determinism();
    criterion_performance();
    std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
