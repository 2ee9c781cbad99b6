#pragma once

#include <algorithm>
#include <vector>

#include "springer/diagrams.hpp"

namespace springer::testutil {

/// Every partition with 1..max_boxes boxes, not just the three families.
inline std::vector<YoungDiagram> all_shapes(int max_boxes) {
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(rows);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            rows.push_back(part);
            self(self, remaining - part, part);
            rows.pop_back();
        }
    };
    for (int n = 1; n <= max_boxes; ++n) rec(rec, n, n);
    return out;
}

} // namespace springer::testutil
