#pragma once

// Embedded copy of data/f_sporadic.txt; a unit test keeps the two identical.

#include <string_view>

namespace domcyc {

inline constexpr std::string_view kSporadicFixture = R"fixture(# Sporadic non-Hamiltonian 2-connected {K_{1,3}, Z_4}-free graphs F1..F4.
# Transcribed from the drawing coordinates. For the 9-vertex graphs:
#   0,1,2 left column (top, middle, bottom)   3,4,5 centre column (apex, centre, bottom apex)
#   6,7,8 right column (top, middle, bottom)
# F4 has a 4-vertex left column 0,1,2,3; centre 4,5,6; right 7,8,9.
# Format: "graph <name> <order>", one "edges" line of u-v pairs, "end".
version 1
graph F1 9
edges 0-1 1-2 0-6 2-8 6-7 7-8 0-3 3-6 5-8 2-5 3-4 4-5 6-8 3-5
end
graph F2 9
edges 0-1 1-2 0-6 2-8 6-7 7-8 0-3 3-6 5-8 2-5 3-4 4-5 6-8
end
graph F3 9
edges 0-1 1-2 0-6 2-8 6-7 7-8 0-3 3-6 5-8 2-5 3-4 4-5
end
graph F4 10
edges 0-1 1-2 2-3 0-7 3-9 7-8 8-9 0-4 4-7 6-9 3-6 4-5 5-6 7-9 4-6
end
)fixture";

}  // namespace domcyc
