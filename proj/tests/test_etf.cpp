#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oilbrush/etf.hpp"
#include "test_support.hpp"

using namespace oilbrush;

namespace {

double mod_pi_diff(double a, double b) {
    double d = std::fabs(canonical_angle(a) - canonical_angle(b));
    return std::min(d, std::numbers::pi - d);
}

}  // namespace

TEST_CASE("canonical_angle maps into [0, pi)") {
    CHECK(canonical_angle(0.0) == doctest::Approx(0.0));
    CHECK(canonical_angle(std::numbers::pi) == doctest::Approx(0.0));
    CHECK(canonical_angle(-0.5) == doctest::Approx(std::numbers::pi - 0.5));
    CHECK(canonical_angle(4.0) == doctest::Approx(4.0 - std::numbers::pi));
}

TEST_CASE("horizontal ramp: tangents are vertical in the interior") {
    const GrayF ramp = testsupport::make_ramp_x(32, 32);
    const EtfField f = compute_etf(ramp, 3, 2);
    for (int y = 4; y < 28; ++y)
        for (int x = 4; x < 28; ++x)
            CHECK(mod_pi_diff(f.angle(x, y), std::numbers::pi / 2.0) < 1e-6);
}

TEST_CASE("constant image: zero modulus, angles still defined") {
    const GrayF flat(16, 16, 50.0);
    const EtfField f = compute_etf(flat, 3, 2);
    for (double m : f.modulus.pixels()) CHECK(m == doctest::Approx(0.0));
    for (double a : f.angle.pixels()) {
        CHECK(a >= 0.0);
        CHECK(a < std::numbers::pi);
    }
}

TEST_CASE("smoothing never touches the modulus") {
    const GrayF cone = testsupport::make_cone(65);
    const EtfField raw = compute_etf(cone, 5, 0);
    const EtfField smoothed = compute_etf(cone, 5, 3);
    REQUIRE(raw.modulus.size() == smoothed.modulus.size());
    for (std::size_t i = 0; i < raw.modulus.size(); ++i)
        CHECK(raw.modulus.pixels()[i] == smoothed.modulus.pixels()[i]);  // bit-identical
}

TEST_CASE("cone image: tangents perpendicular to the radius") {
    const int n = 129;
    const GrayF cone = testsupport::make_cone(n);
    const EtfField f = compute_etf(cone, 5, 3);
    const double c = (n - 1) / 2.0;
    int checked = 0, ok = 0;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const double r = std::hypot(x - c, y - c);
            if (r <= 10.0) continue;
            const double expected = std::atan2(y - c, x - c) + std::numbers::pi / 2.0;
            ++checked;
            if (mod_pi_diff(f.angle(x, y), expected) < 5.0 * std::numbers::pi / 180.0)
                ++ok;
        }
    }
    CHECK(static_cast<double>(ok) / checked >= 0.95);
}

TEST_CASE("cone image: smoothing does not hurt the mean angular error") {
    const int n = 129;
    const GrayF cone = testsupport::make_cone(n);
    const double c = (n - 1) / 2.0;
    auto mean_err = [&](const EtfField& f) {
        double sum = 0.0;
        int cnt = 0;
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                const double r = std::hypot(x - c, y - c);
                if (r <= 10.0) continue;
                const double expected =
                    std::atan2(y - c, x - c) + std::numbers::pi / 2.0;
                sum += mod_pi_diff(f.angle(x, y), expected);
                ++cnt;
            }
        return sum / cnt;
    };
    const double e0 = mean_err(compute_etf(cone, 5, 0));
    const double e3 = mean_err(compute_etf(cone, 5, 3));
    CHECK(e3 <= e0 + 1e-9);
}

TEST_CASE("field is invariant under a+pi relabeling") {
    const GrayF cone = testsupport::make_cone(33);
    const EtfField f = compute_etf(cone, 3, 1);
    for (double a : f.angle.pixels())
        CHECK(canonical_angle(a + std::numbers::pi) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("direction_at rounds the anchor position") {
    EtfField f = constant_field(8, 8, 1.1);
    CHECK(direction_at(f, 3.4, 6.6) == doctest::Approx(1.1));
    CHECK(direction_at(f, 0.0, 0.0) == doctest::Approx(1.1));
    f.angle(0, 0) = 0.4;
    CHECK(direction_at(f, 0.2, 0.3) == doctest::Approx(0.4));
    CHECK_THROWS_AS(direction_at(f, -5.0, 0.0), std::out_of_range);
}

TEST_CASE("vertical edge: tangent on the edge is vertical") {
    GrayF img(40, 40, 0.0);
    for (int y = 0; y < 40; ++y)
        for (int x = 20; x < 40; ++x) img(x, y) = 255.0;
    const EtfField f = compute_etf(img, 5, 3);
    for (int y = 8; y < 32; ++y)
        CHECK(mod_pi_diff(f.angle(20, y), std::numbers::pi / 2.0) <
              2.0 * std::numbers::pi / 180.0);
}
