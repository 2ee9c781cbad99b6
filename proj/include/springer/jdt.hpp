#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/tableaux.hpp"

namespace springer {

/// A skew tableau: a filling of the boxes of outer \ inner with distinct
/// integers that increase along rows and down columns. Cells of the inner
/// region hold 0 in the grid.
class SkewTableau {
public:
    SkewTableau(YoungDiagram outer, YoungDiagram inner, std::vector<std::vector<int>> grid)
        : outer_(std::move(outer)), inner_(std::move(inner)), grid_(std::move(grid)) {
        if (inner_.row_count() > outer_.row_count())
            throw std::invalid_argument("skew tableau: inner does not fit in outer");
        for (int p = 1; p <= inner_.row_count(); ++p)
            if (inner_.row(p) > outer_.row(p))
                throw std::invalid_argument("skew tableau: inner does not fit in outer");
        if (static_cast<int>(grid_.size()) != outer_.row_count())
            throw std::invalid_argument("skew tableau: grid/shape mismatch");
        for (int p = 1; p <= outer_.row_count(); ++p) {
            if (static_cast<int>(grid_[p - 1].size()) != outer_.row(p))
                throw std::invalid_argument("skew tableau: grid/shape mismatch");
            for (int q = 1; q <= outer_.row(p); ++q) {
                const bool in_inner = q <= inner_.row(p);
                if (in_inner != (grid_[p - 1][q - 1] == 0))
                    throw std::invalid_argument("skew tableau: cells must fill exactly outer minus inner");
            }
        }
        for (int p = 1; p <= outer_.row_count(); ++p)
            for (int q = inner_.row(p) + 2; q <= outer_.row(p); ++q)
                if (grid_[p - 1][q - 2] >= grid_[p - 1][q - 1])
                    throw std::invalid_argument("skew tableau: row not increasing");
        for (int p = 2; p <= outer_.row_count(); ++p)
            for (int q = inner_.row(p) + 1; q <= outer_.row(p); ++q)
                if (q > inner_.row(p - 1) && grid_[p - 2][q - 1] >= grid_[p - 1][q - 1])
                    throw std::invalid_argument("skew tableau: column not increasing");
    }

    [[nodiscard]] const YoungDiagram& outer() const { return outer_; }
    [[nodiscard]] const YoungDiagram& inner() const { return inner_; }
    [[nodiscard]] const std::vector<std::vector<int>>& grid() const { return grid_; }

    /// Rows of a straight-shape (empty inner) skew tableau.
    [[nodiscard]] const std::vector<std::vector<int>>& straight_rows() const {
        if (!inner_.empty())
            throw std::logic_error("skew tableau: not of straight shape");
        return grid_;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (int p = 1; p <= outer_.row_count(); ++p) {
            if (p > 1) out += '/';
            for (int q = 1; q <= outer_.row(p); ++q) {
                if (q > 1) out += ',';
                const int e = grid_[p - 1][q - 1];
                out += e == 0 ? "." : std::to_string(e);
            }
        }
        return out;
    }

private:
    YoungDiagram outer_;
    YoungDiagram inner_;
    std::vector<std::vector<int>> grid_;
};

/// The skew subtableau of entries i+1..j of a standard tableau, with inner
/// shape given by the entries 1..i. Requires 0 <= i < j <= n.
inline SkewTableau skew_subtableau(const StandardTableau& t, int i, int j) {
    const int n = t.size();
    if (i < 0 || i >= j || j > n)
        throw std::out_of_range("skew_subtableau: need 0 <= i < j <= n");

    std::vector<int> inner_rows;
    std::vector<int> outer_rows;
    for (int e = 1; e <= j; ++e) {
        const int p = t.row_of(e);
        if (p > static_cast<int>(outer_rows.size())) outer_rows.resize(p, 0);
        ++outer_rows[p - 1];
        if (e <= i) {
            if (p > static_cast<int>(inner_rows.size())) inner_rows.resize(p, 0);
            ++inner_rows[p - 1];
        }
    }
    YoungDiagram outer(outer_rows);
    YoungDiagram inner(inner_rows);

    std::vector<std::vector<int>> grid(outer.row_count());
    for (int p = 1; p <= outer.row_count(); ++p) grid[p - 1].assign(outer.row(p), 0);
    for (int e = i + 1; e <= j; ++e) {
        auto [p, q] = t.position_of(e);
        grid[p - 1][q - 1] = e;
    }
    return SkewTableau(std::move(outer), std::move(inner), std::move(grid));
}

/// Order in which inner corners are consumed during rectification. The
/// resulting straight shape does not depend on the choice; the default makes
/// outputs reproducible.
enum class SlidePolicy {
    bottom_corner_first, // corner with the largest row index
    top_corner_first,    // corner with the smallest row index
};

/// Jeu de taquin rectification: slides the filling through the inner region
/// until the inner shape is empty. Preserves the entry multiset and the
/// row/column increase; the resulting shape is independent of slide order.
inline SkewTableau rectify(const SkewTableau& s,
                           SlidePolicy policy = SlidePolicy::bottom_corner_first) {
    std::vector<int> outer(s.outer().rows());
    std::vector<int> inner(s.inner().rows());
    auto grid = s.grid();

    auto inner_boxes = [&] {
        int total = 0;
        for (int len : inner) total += len;
        return total;
    };

    while (inner_boxes() > 0) {
        // Inner corners: last cell of an inner row that the next inner row
        // does not reach.
        int corner_row = -1;
        for (int p = 0; p < static_cast<int>(inner.size()); ++p) {
            if (inner[p] == 0) continue;
            const bool corner =
                p + 1 >= static_cast<int>(inner.size()) || inner[p + 1] < inner[p];
            if (!corner) continue;
            if (corner_row < 0 ||
                (policy == SlidePolicy::bottom_corner_first ? p > corner_row : p < corner_row))
                corner_row = p;
        }
        if (corner_row < 0)
            throw std::logic_error("rectify: no inner corner found");

        int p = corner_row;
        int q = inner[p] - 1; // 0-based hole position
        --inner[p];
        while (true) {
            const bool has_right = q + 1 < outer[p];
            const bool has_below =
                p + 1 < static_cast<int>(outer.size()) && q < outer[p + 1];
            if (!has_right && !has_below) break;
            bool move_right;
            if (has_right && has_below)
                move_right = grid[p][q + 1] < grid[p + 1][q];
            else
                move_right = has_right;
            if (move_right) {
                grid[p][q] = grid[p][q + 1];
                grid[p][q + 1] = 0;
                ++q;
            } else {
                grid[p][q] = grid[p + 1][q];
                grid[p + 1][q] = 0;
                ++p;
            }
        }
        // The hole ends at an outer corner; remove that box.
        --outer[p];
        grid[p].pop_back();
        if (outer[p] == 0) {
            outer.erase(outer.begin() + p);
            grid.erase(grid.begin() + p);
            if (p < static_cast<int>(inner.size()))
                inner.erase(inner.begin() + p);
        }
        while (!inner.empty() && inner.back() == 0) inner.pop_back();
    }
    return SkewTableau(YoungDiagram(outer), YoungDiagram(), std::move(grid));
}

/// Shape of the rectified skew subtableau of entries i+1..j of t.
inline YoungDiagram quotient_shape_T(const StandardTableau& t, int i, int j,
                                     SlidePolicy policy = SlidePolicy::bottom_corner_first) {
    return rectify(skew_subtableau(t, i, j), policy).outer();
}

/// Row counts of the entries i+1..j of a row-standard tableau, sorted
/// decreasingly with empty rows dropped.
inline YoungDiagram quotient_shape_tau(const RowStandardTableau& t, int i, int j) {
    const int n = t.size();
    if (i < 0 || i >= j || j > n)
        throw std::out_of_range("quotient_shape_tau: need 0 <= i < j <= n");
    std::vector<int> counts(t.shape().row_count(), 0);
    for (int e = i + 1; e <= j; ++e) ++counts[t.row_of(e) - 1];
    std::sort(counts.begin(), counts.end(), std::greater<>());
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return YoungDiagram(std::move(counts));
}

/// All quotient shapes of a standard tableau, indexed by 0 <= i < j <= n.
class QuotientTable {
public:
    explicit QuotientTable(const StandardTableau& t) : n_(t.size()) {
        shapes_.resize(static_cast<std::size_t>(n_ + 1) * (n_ + 1));
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                shapes_[index(i, j)] = quotient_shape_T(t, i, j);
    }

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] const YoungDiagram& at(int i, int j) const {
        if (i < 0 || i >= j || j > n_)
            throw std::out_of_range("quotient table: need 0 <= i < j <= n");
        return shapes_[index(i, j)];
    }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * (n_ + 1) + j;
    }

    int n_;
    std::vector<YoungDiagram> shapes_;
};

/// The Schützenberger transform: entry i is placed in the box added between
/// the rectification shapes of the last i-1 and last i entries of t.
/// Shape-preserving involution on standard tableaux.
inline StandardTableau schuetzenberger(const StandardTableau& t) {
    const int n = t.size();
    std::vector<std::vector<int>> rows;
    YoungDiagram prev; // shape of the rectified tail of length i-1
    for (int i = 1; i <= n; ++i) {
        YoungDiagram cur = quotient_shape_T(t, n - i, n);
        int new_row = -1;
        int grown = 0;
        for (int p = 1; p <= cur.row_count(); ++p) {
            if (cur.row(p) != prev.row(p)) {
                if (cur.row(p) != prev.row(p) + 1) grown = 2; // force failure
                new_row = p;
                ++grown;
            }
        }
        if (grown != 1 || new_row < 0)
            throw std::logic_error("schuetzenberger: tail shapes do not grow by one box");
        if (new_row > static_cast<int>(rows.size())) rows.emplace_back();
        rows[new_row - 1].push_back(i);
        prev = std::move(cur);
    }
    return StandardTableau(std::move(rows));
}

} // namespace springer
