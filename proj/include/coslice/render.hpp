#pragma once

// Deterministic text and SVG rendering: functors in the vertical r/t/gamma
// layout, slice towers, and slice-filtration charts.

#include "coslice/slice.hpp"

#include <string>

namespace coslice {

std::string format_matrix(const IntMatrix&);  // "[[1,2],[0,1]]"
std::string format_mackey_text(const MackeyFunctor&, const std::string& indent = "");
std::string slice_tower_text(const SliceTower&);

struct ChartMarker {
    long filtration = 0;
    std::vector<std::string> level_labels;  // levels 0..n
};

struct ChartData {
    CyclicGroupSpec spec;
    std::vector<ChartMarker> markers;  // increasing filtration
};

ChartData chart_from_tower(const SliceTower&);
std::string chart_text(const ChartData&);
std::string chart_svg(const ChartData&);

}  // namespace coslice
