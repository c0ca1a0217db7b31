#ifndef CSIS_SYNTHETIC_HPP
#define CSIS_SYNTHETIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "csis/image.hpp"

namespace csis {

/// Deterministic textured test covers. All recipes combine smooth large-scale
/// structure with enough fine texture that the compressed-sensing samples are
/// informative, which is the regime natural photographs sit in.
///
/// Recipes: "terrain" (random low-frequency relief + grain),
/// "plasma" (multi-octave value noise), "rings" (radial waves + weave).
Image synthetic_cover(const std::string& recipe, int width, int height, std::uint64_t seed,
                      int channels = 1);

std::vector<std::string> synthetic_recipes();

}  // namespace csis

#endif  // CSIS_SYNTHETIC_HPP
