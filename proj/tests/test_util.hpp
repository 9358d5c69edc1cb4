#pragma once

#include <vector>

#include "edom/incidence.hpp"

namespace edom::testutil {

inline IncidenceStructure fano() {
    return IncidenceStructure::from_blocks(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

} // namespace edom::testutil
