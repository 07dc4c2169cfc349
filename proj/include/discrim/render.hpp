#pragma once

#include "discrim/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discrim {

/*
 * Static SVG of projective lines drawn in an affine chart. `chart` becomes the
 * line at infinity (default z = 0); a line equal to it is omitted. Points of
 * multiplicity >= 3 are marked. Floating point is used for drawing only.
 */
std::string render_svg(const std::vector<ProjectiveFlat>& lines, const std::vector<std::string>& labels,
                       const std::optional<ProjectiveFlat>& chart = std::nullopt);

}  // namespace discrim
