#pragma once

#include <algorithm>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/tableaux.hpp"

namespace springer {

namespace detail {

template <bool ColumnStrict, typename Sink>
void grow_tableaux(const YoungDiagram& shape, std::vector<std::vector<int>>& rows,
                   std::vector<int>& filled, int entry, Sink&& sink) {
    const int n = shape.size();
    if (entry > n) {
        sink(rows);
        return;
    }
    for (int p = 0; p < shape.row_count(); ++p) {
        if (filled[p] >= shape.row(p + 1)) continue;
        if constexpr (ColumnStrict) {
            if (p > 0 && filled[p - 1] <= filled[p]) continue;
        }
        rows[p].push_back(entry);
        ++filled[p];
        grow_tableaux<ColumnStrict>(shape, rows, filled, entry + 1, sink);
        --filled[p];
        rows[p].pop_back();
    }
}

} // namespace detail

/// All standard tableaux of a shape, in lexicographic order of their rows.
inline std::vector<StandardTableau> enumerate_standard(const YoungDiagram& shape) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.row_count());
    std::vector<int> filled(shape.row_count(), 0);
    detail::grow_tableaux<true>(shape, rows, filled, 1,
                                [&](const std::vector<std::vector<int>>& r) {
                                    out.emplace_back(RowStandardTableau(r));
                                });
    std::sort(out.begin(), out.end());
    return out;
}

/// All row-standard tableaux of a shape, in lexicographic order of their
/// rows. Count: n! divided by the product of the row-length factorials.
inline std::vector<RowStandardTableau> enumerate_row_standard(const YoungDiagram& shape) {
    std::vector<RowStandardTableau> out;
    std::vector<std::vector<int>> rows(shape.row_count());
    std::vector<int> filled(shape.row_count(), 0);
    detail::grow_tableaux<false>(shape, rows, filled, 1,
                                 [&](const std::vector<std::vector<int>>& r) {
                                     out.emplace_back(r);
                                 });
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of standard tableaux of a shape (hook length formula).
inline unsigned long long standard_count(const YoungDiagram& shape) {
    const int n = shape.size();
    unsigned long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<unsigned long long>(i);
    const auto cols = shape.columns();
    unsigned long long hooks = 1;
    for (int p = 1; p <= shape.row_count(); ++p)
        for (int q = 1; q <= shape.row(p); ++q)
            hooks *= static_cast<unsigned long long>((shape.row(p) - q) + (cols[q - 1] - p) + 1);
    return factorial / hooks;
}

/// Number of row-standard tableaux of a shape (multinomial coefficient).
inline unsigned long long row_standard_count(const YoungDiagram& shape) {
    unsigned long long count = 1;
    int placed = 0;
    for (int p = shape.row_count(); p >= 1; --p) {
        // choose(placed + row, row) told as incremental product
        for (int k = 1; k <= shape.row(p); ++k) {
            ++placed;
            count = count * static_cast<unsigned long long>(placed) /
                    static_cast<unsigned long long>(k);
        }
    }
    return count;
}

/// All shapes with 1..max_boxes boxes lying in at least one of the three
/// families, sorted by box count then lexicographically.
inline std::vector<YoungDiagram> family_shapes(int max_boxes) {
    std::vector<YoungDiagram> out;
    std::vector<int> rows;
    auto emit = [&] {
        YoungDiagram y(rows);
        if (classify(y).any()) out.push_back(std::move(y));
    };
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (!rows.empty()) emit();
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            rows.push_back(part);
            self(self, remaining - part, part);
            rows.pop_back();
        }
    };
    for (int n = 1; n <= max_boxes; ++n) rec(rec, n, n);
    std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.rows() < b.rows();
    });
    return out;
}

} // namespace springer
