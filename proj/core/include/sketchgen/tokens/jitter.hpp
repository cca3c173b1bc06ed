#pragma once

#include <cstdint>
#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::tokens {

inline constexpr double kJitterVariance = 0.1;

// Adds zero-mean Gaussian noise with the given variance to every
// coordinate, redrawing any value that would leave the sketch's bounding
// box. Deterministic for a given seed.
std::vector<sketch::Point2> jitter(const sketch::SketchHypergraph& sketch, std::uint64_t seed,
                                   double variance = kJitterVariance);

// jitter() rounded back onto the grid (half away from zero). Topology is
// unchanged: vertices are not merged, so edges keep their indices.
sketch::SketchHypergraph jitter_quantized(const sketch::SketchHypergraph& sketch, std::uint64_t seed,
                                          double variance = kJitterVariance);

} // namespace sketchgen::tokens
