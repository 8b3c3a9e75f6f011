#pragma once

#include <string>

#include "supint/classification.hpp"

namespace supint::io {

/// Euclidean slice: z = x + iy, w = x - iy. Minkowski slice: z = x, w = y.
/// Double lines are two contiguous strokes; complex lines without real points
/// are dashed and annotated. Empty arrangements give an empty frame.
std::string arrangement_svg(const LineArrangement& arr, RealForm form, const std::string& title);

}  // namespace supint::io
