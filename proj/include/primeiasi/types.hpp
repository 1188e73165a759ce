#pragma once

#include <cstdint>

namespace primeiasi {

// Dense vertex id in [0, vertex_count).
using Vertex = std::uint32_t;

}  // namespace primeiasi
