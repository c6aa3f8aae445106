#pragma once

#include "nforge/yd_radford.hpp"

namespace nforge::detail {

struct SpanningSet {
    std::vector<BoxSpace::Vec> vectors;
    std::vector<std::string> labels;
};

// Spanning vectors of a family inside the box space of its underlying simple module.
SpanningSet family_vectors(const BoxSpace& box, Family f, const FamilyIndices& idx);

}  // namespace nforge::detail
