#pragma once

#include <cstdint>

#include "oilbrush/raster.hpp"

namespace oilbrush {

// Edge tangent flow: per-pixel tangent direction (an undirected line, stored
// in [0, pi)) plus the gradient modulus the smoothing weights come from.
struct EtfField {
    GrayF angle;
    GrayF modulus;
};

// Map any angle onto the canonical tangent range [0, pi).
double canonical_angle(double a);

// Sobel gradient field, directions rotated by pi/2, then `iterations` passes
// of modulus-weighted circular averaging (mod pi, via the doubled-angle
// domain) over a (2*radius+1)^2 window. The modulus is never altered.
EtfField compute_etf(const GrayF& gray, int radius = 5, int iterations = 3);

// Angle at the rounded anchor position.
double direction_at(const EtfField& field, double x, double y);

// Ablation fields: every pixel shares one direction / seeded per-pixel noise.
EtfField constant_field(int width, int height, double angle);
EtfField random_field(int width, int height, std::uint64_t seed);

}  // namespace oilbrush
