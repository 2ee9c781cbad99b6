#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/extint.hpp"
#include "springer/membership.hpp"
#include "springer/tableaux.hpp"

namespace springer {

/// Fixed-size grid of boxes, 0 marking a blank. Rows and columns are 1-based.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;

    Grid() = default;
    Grid(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, 0) {}

    [[nodiscard]] int at(int r, int c) const {
        return cells[static_cast<std::size_t>(r - 1) * cols + (c - 1)];
    }
    int& at(int r, int c) { return cells[static_cast<std::size_t>(r - 1) * cols + (c - 1)]; }

    [[nodiscard]] int last_occupied_in_row(int r) const {
        for (int c = cols; c >= 1; --c)
            if (at(r, c) != 0) return c;
        return 0;
    }
    [[nodiscard]] int last_occupied_column() const {
        int m = 0;
        for (int r = 1; r <= rows; ++r) m = std::max(m, last_occupied_in_row(r));
        return m;
    }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells;
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        const int width = last_occupied_column();
        for (int r = 1; r <= rows; ++r) {
            if (r > 1) out += '\n';
            for (int c = 1; c <= std::max(width, 1); ++c) {
                if (c > 1) out += ' ';
                const int e = at(r, c);
                out += e == 0 ? "." : std::to_string(e);
            }
        }
        return out;
    }
};

/// Outcome of one construction run: every intermediate state is retained,
/// and a failed run records the step and which of the algorithm's failure
/// rules fired (1 or 2).
struct ConstructionTrace {
    bool success = false;
    int failure_step = 0;
    int failure_kind = 0;
    std::string failure_label;
    std::vector<Grid> steps;
    std::vector<std::vector<ExtInt>> indices; // two-column runs: f per row, per step

    [[nodiscard]] std::string render() const {
        std::string out;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            out += "step " + std::to_string(k + 1) + ":\n";
            std::string grid = steps[k].to_string();
            if (!indices.empty()) {
                // Append the index column to each grid row.
                std::vector<std::string> lines;
                std::size_t start = 0;
                while (start <= grid.size()) {
                    auto nl = grid.find('\n', start);
                    if (nl == std::string::npos) {
                        lines.push_back(grid.substr(start));
                        break;
                    }
                    lines.push_back(grid.substr(start, nl - start));
                    start = nl + 1;
                }
                std::size_t width = 0;
                for (const auto& l : lines) width = std::max(width, l.size());
                grid.clear();
                for (std::size_t r = 0; r < lines.size(); ++r) {
                    std::string line = lines[r];
                    line.resize(width, ' ');
                    line += "   " + indices[k][r].to_string();
                    grid += line;
                    if (r + 1 < lines.size()) grid += '\n';
                }
            }
            out += grid + "\n";
        }
        if (success)
            out += "success\n";
        else
            out += "failure at step " + std::to_string(failure_step) + " (" + failure_label + ")\n";
        return out;
    }
};

namespace detail {

inline void require_family(const RowStandardTableau& tau, const StandardTableau& t,
                           bool ok, const char* msg) {
    require_same_shape(tau, t, "construct");
    if (!ok) throw std::invalid_argument(msg);
}

/// Column counts of the entries 1..i of t must match the column counts of
/// the grid, for every column of the shape of t.
inline void check_column_counts(const Grid& g, const StandardTableau& t, int i,
                                int columns_checked) {
    std::vector<int> want(columns_checked, 0);
    for (int e = 1; e <= i; ++e) {
        const int q = t.column_of(e);
        if (q <= columns_checked) ++want[q - 1];
    }
    for (int q = 1; q <= columns_checked; ++q) {
        int have = 0;
        for (int r = 1; r <= g.rows; ++r)
            if (g.at(r, q) != 0) ++have;
        if (have != want[q - 1])
            throw std::logic_error("construction: column count invariant violated");
    }
}

/// Row entries of the grid must increase left to right and occur in the same
/// row of tau.
inline void check_row_contents(const Grid& g, const RowStandardTableau& tau,
                               bool require_increasing_all_rows) {
    for (int r = 1; r <= g.rows; ++r) {
        int prev = 0;
        for (int c = 1; c <= g.cols; ++c) {
            const int e = g.at(r, c);
            if (e == 0) continue;
            if (tau.row_of(e) != r)
                throw std::logic_error("construction: entry strayed from its row");
            if ((require_increasing_all_rows || r == 1) && prev >= e)
                throw std::logic_error("construction: row order invariant violated");
            prev = e;
        }
    }
}

inline std::vector<std::pair<int, int>> runs_of(const Grid& g, int row) {
    std::vector<std::pair<int, int>> runs;
    int c = 1;
    while (c <= g.cols) {
        if (g.at(row, c) == 0) {
            ++c;
            continue;
        }
        int start = c;
        while (c <= g.cols && g.at(row, c) != 0) ++c;
        runs.emplace_back(start, c - 1);
    }
    return runs;
}

} // namespace detail

/// Two-row insertion algorithm. Entries of the first row of t open a new
/// column at the right end; entries of its second row extend the last strip
/// of their target row, after which the head of every strip not starting at
/// the first column is pushed left onto the end of the preceding strip.
/// Fails when the target row already reaches the last occupied column.
inline ConstructionTrace construct_two_row(const RowStandardTableau& tau,
                                           const StandardTableau& t) {
    detail::require_family(tau, t, tau.shape().row_count() <= 2,
                           "construct_two_row: shape has more than two rows");
    const int n = tau.size();
    ConstructionTrace trace;
    Grid g(2, n);

    for (int i = 1; i <= n; ++i) {
        const int p = tau.row_of(i);
        if (t.row_of(i) == 1) {
            g.at(p, g.last_occupied_column() + 1) = i;
        } else {
            const int last = g.last_occupied_column();
            if (last >= 1 && g.at(p, last) != 0) {
                trace.failure_step = i;
                trace.failure_kind = 1;
                trace.failure_label = "last-column occupied";
                return trace;
            }
            g.at(p, g.last_occupied_in_row(p) + 1) = i;
            for (int r = 1; r <= 2; ++r) {
                const auto runs = detail::runs_of(g, r);
                for (int k = static_cast<int>(runs.size()) - 1; k >= 0; --k) {
                    if (runs[k].first == 1) continue; // in-place strip
                    const int dest = k > 0 ? runs[k - 1].second + 1 : 1;
                    g.at(r, dest) = g.at(r, runs[k].first);
                    g.at(r, runs[k].first) = 0;
                }
            }
        }
        detail::check_row_contents(g, tau, true);
        detail::check_column_counts(g, t, i, g.last_occupied_column());
        trace.steps.push_back(g);
    }

    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= tau.shape().row(r); ++c)
            if (g.at(r, c) != tau.entry_at(r, c))
                throw std::logic_error("construction: final state differs from tau");
    trace.success = true;
    return trace;
}

/// Two-column insertion algorithm on the full r x 2 grid, with one extended
/// index per row. Each entry lands in the second box of its row; entries of
/// the first column of t then push one open second-column entry to the left,
/// choosing the one whose right neighbour in tau is smallest.
inline ConstructionTrace construct_two_col(const RowStandardTableau& tau,
                                           const StandardTableau& t) {
    detail::require_family(tau, t, tau.shape().row(1) <= 2,
                           "construct_two_col: shape has more than two columns");
    const int n = tau.size();
    const int r = tau.shape().row_count();
    ConstructionTrace trace;
    Grid g(r, 2);
    std::vector<ExtInt> f(r, ExtInt::infinity());

    auto record = [&] {
        detail::check_row_contents(g, tau, true);
        detail::check_column_counts(g, t, static_cast<int>(trace.steps.size()) + 1, 2);
        // Finite indices exactly on rows with occupied first box; the largest
        // finite index equals the number of rows occupied only in the second
        // column.
        int open_rows = 0;
        ExtInt max_finite(0);
        bool has_finite = false;
        for (int p = 1; p <= r; ++p) {
            const bool first_filled = g.at(p, 1) != 0;
            if (f[p - 1].is_infinite() == first_filled)
                throw std::logic_error("construction: index finiteness invariant violated");
            if (!first_filled && g.at(p, 2) != 0) ++open_rows;
            if (!f[p - 1].is_infinite()) {
                has_finite = true;
                max_finite = std::max(max_finite, f[p - 1]);
            }
        }
        if (has_finite && max_finite.value() != open_rows)
            throw std::logic_error("construction: index ceiling invariant violated");
        trace.steps.push_back(g);
        trace.indices.push_back(f);
    };

    for (int i = 1; i <= n; ++i) {
        const int pi = tau.row_of(i);
        if (g.at(pi, 2) != 0) {
            trace.failure_step = i;
            trace.failure_kind = 1;
            trace.failure_label = "second box occupied";
            return trace;
        }
        g.at(pi, 2) = i;
        const std::vector<ExtInt> old = f;
        if (t.column_of(i) == 2) {
            for (int p = 1; p <= r; ++p)
                if (old[p - 1] < old[pi - 1]) f[p - 1] = old[p - 1].succ();
        } else {
            if (old[pi - 1] == ExtInt(0)) {
                trace.failure_step = i;
                trace.failure_kind = 2;
                trace.failure_label = "zero index";
                return trace;
            }
            // Open entries of the second column; all lie in the first column
            // of tau.
            int pick = 0;
            ExtInt best = ExtInt::infinity();
            for (int p = 1; p <= r; ++p) {
                const int e = g.at(p, 2);
                if (e == 0 || g.at(p, 1) != 0) continue;
                if (tau.column_of(e) != 1)
                    throw std::logic_error("construction: open entry outside first column of tau");
                const ExtInt w = tau.right_neighbor(e);
                if (pick == 0 || w < best) {
                    pick = p;
                    best = w;
                }
            }
            if (pick == 0)
                throw std::logic_error("construction: no entry available to push left");
            g.at(pick, 1) = g.at(pick, 2);
            g.at(pick, 2) = 0;
            for (int p = 1; p <= r; ++p) {
                if (p == pick)
                    f[p - 1] = ExtInt(0);
                else if (old[p - 1] >= old[pi - 1])
                    f[p - 1] = old[p - 1].pred();
                else
                    f[p - 1] = old[p - 1];
            }
        }
        record();
    }

    for (int p = 1; p <= r; ++p)
        for (int c = 1; c <= tau.shape().row(p); ++c)
            if (g.at(p, c) != tau.entry_at(p, c))
                throw std::logic_error("construction: final state differs from tau");
    trace.success = true;
    return trace;
}

namespace detail {

/// Positions of the entries 1..i of tau inside the hook working grid:
/// first-row entries keep their column, all others sit in the first column.
inline Grid hook_prefix(const RowStandardTableau& tau, int i, int rows, int cols) {
    Grid g(rows, cols);
    for (int e = 1; e <= i; ++e) {
        auto [p, q] = tau.position_of(e);
        g.at(p, q) = e;
    }
    return g;
}

} // namespace detail

/// Hook insertion algorithm on the r x (s+1) working grid. Every entry lands
/// in the column just past the first-row prefix of tau; first-column entries
/// of t then push the uppermost displaced entry back to the first column.
inline ConstructionTrace construct_hook(const RowStandardTableau& tau,
                                        const StandardTableau& t) {
    detail::require_family(tau, t, classify(tau.shape()).hook,
                           "construct_hook: shape is not of hook type");
    const int n = tau.size();
    const int r = tau.shape().row_count();
    const int s = tau.shape().row(1);
    ConstructionTrace trace;
    Grid g(r, s + 1);
    int prefix = 0; // first-row entries of tau among 1..i-1

    for (int i = 1; i <= n; ++i) {
        const int p = tau.row_of(i);
        if (t.row_of(i) == 1) {
            if (!(g == detail::hook_prefix(tau, i - 1, r, s + 1))) {
                trace.failure_step = i;
                trace.failure_kind = 1;
                trace.failure_label = "stray entry";
                return trace;
            }
            g.at(p, prefix + 1) = i;
        } else {
            g.at(p, prefix + 1) = i;
            if (prefix > 0 && g == detail::hook_prefix(tau, i, r, s + 1)) {
                trace.failure_step = i;
                trace.failure_kind = 2;
                trace.failure_label = "nothing to push";
                return trace;
            }
            int pick = 0;
            for (int q = 2; q <= r; ++q) {
                if (g.at(q, prefix + 1) != 0) {
                    pick = q;
                    break;
                }
            }
            if (pick == 0)
                throw std::logic_error("construction: no entry available to push left");
            const int moved = g.at(pick, prefix + 1);
            g.at(pick, prefix + 1) = 0;
            g.at(pick, 1) = moved;
        }
        if (p == 1) ++prefix;

        detail::check_row_contents(g, tau, false);
        // The state differs from the tau prefix by at most one entry, which
        // sits below the first row.
        {
            const Grid want = detail::hook_prefix(tau, i, r, s + 1);
            int diffs = 0;
            for (int row = 1; row <= r; ++row)
                for (int col = 1; col <= s + 1; ++col)
                    if (g.at(row, col) != want.at(row, col) && g.at(row, col) != 0) {
                        ++diffs;
                        if (row == 1)
                            throw std::logic_error("construction: displaced entry in first row");
                    }
            if (diffs > 1)
                throw std::logic_error("construction: more than one displaced entry");
        }
        trace.steps.push_back(g);
    }

    if (!(g == detail::hook_prefix(tau, n, r, s + 1)))
        throw std::logic_error("construction: final state differs from tau");
    // Column counts can drift from the target in runs that are going to
    // fail; on a completed run they must have tracked t throughout.
    for (int i = 1; i <= n; ++i)
        detail::check_column_counts(trace.steps[i - 1], t, i, s);
    trace.success = true;
    return trace;
}

/// Runs the applicable construction for an explicitly chosen family.
inline ConstructionTrace construct(const RowStandardTableau& tau, const StandardTableau& t,
                                   Criterion family) {
    switch (family) {
        case Criterion::hook_A: return construct_hook(tau, t);
        case Criterion::two_row_A: return construct_two_row(tau, t);
        case Criterion::two_col_A: return construct_two_col(tau, t);
        default: throw std::invalid_argument("construct: not a family selector");
    }
}

} // namespace springer
