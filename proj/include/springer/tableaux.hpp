#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/extint.hpp"

namespace springer {

/// A row-standard tableau: a numbering of a Young diagram by 1..n whose
/// rows increase to the right. Immutable after validation.
class RowStandardTableau {
public:
    explicit RowStandardTableau(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows)) {
        std::vector<int> lengths;
        lengths.reserve(rows_.size());
        for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
        shape_ = YoungDiagram(lengths); // rejects empty or increasing rows

        const int n = shape_.size();
        pos_.assign(n + 1, {0, 0});
        for (int p = 0; p < static_cast<int>(rows_.size()); ++p) {
            const auto& row = rows_[p];
            for (int q = 0; q < static_cast<int>(row.size()); ++q) {
                const int e = row[q];
                if (q > 0 && row[q - 1] >= e)
                    throw std::invalid_argument("tableau: row " + std::to_string(p + 1) +
                                                " is not strictly increasing");
                if (e < 1 || e > n || pos_[e].first != 0)
                    throw std::invalid_argument("tableau: entries are not a permutation of 1.." +
                                                std::to_string(n));
                pos_[e] = {p + 1, q + 1};
            }
        }
    }

    /// Parses the wire format: rows joined by "/", entries joined by ",".
    /// Whitespace is ignored. Example: "3,4,8/1,6,7/2,5".
    static RowStandardTableau parse(std::string_view text);

    [[nodiscard]] const YoungDiagram& shape() const { return shape_; }
    [[nodiscard]] int size() const { return shape_.size(); }
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// 1-based row index of an entry.
    [[nodiscard]] int row_of(int entry) const { return at(entry).first; }
    /// 1-based column index of an entry.
    [[nodiscard]] int column_of(int entry) const { return at(entry).second; }
    /// (row, column), both 1-based.
    [[nodiscard]] std::pair<int, int> position_of(int entry) const { return at(entry); }

    /// Entry at (row, column), 1-based; 0 when the box does not exist.
    [[nodiscard]] int entry_at(int row, int col) const {
        if (!shape_.contains(row, col)) return 0;
        return rows_[row - 1][col - 1];
    }

    /// Entry to the right of `entry` in its row, or infinity at a row end.
    [[nodiscard]] ExtInt right_neighbor(int entry) const {
        auto [p, q] = at(entry);
        const int e = entry_at(p, q + 1);
        return e == 0 ? ExtInt::infinity() : ExtInt(e);
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            if (p > 0) out += '/';
            for (std::size_t q = 0; q < rows_[p].size(); ++q) {
                if (q > 0) out += ',';
                out += std::to_string(rows_[p][q]);
            }
        }
        return out;
    }

    friend bool operator==(const RowStandardTableau& a, const RowStandardTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const RowStandardTableau& a, const RowStandardTableau& b) {
        return !(a == b);
    }
    friend bool operator<(const RowStandardTableau& a, const RowStandardTableau& b) {
        return a.rows_ < b.rows_;
    }

private:
    [[nodiscard]] std::pair<int, int> at(int entry) const {
        if (entry < 1 || entry > size())
            throw std::out_of_range("tableau: entry " + std::to_string(entry) + " out of range");
        return pos_[entry];
    }

    YoungDiagram shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> pos_; // entry -> (row, col), 1-based
};

inline bool is_standard(const RowStandardTableau& t) {
    const auto cols = t.shape().columns();
    for (int q = 1; q <= static_cast<int>(cols.size()); ++q)
        for (int p = 2; p <= cols[q - 1]; ++p)
            if (t.entry_at(p - 1, q) >= t.entry_at(p, q)) return false;
    return true;
}

/// A standard tableau: row-standard with columns increasing to the bottom.
class StandardTableau {
public:
    explicit StandardTableau(RowStandardTableau t) : t_(std::move(t)) {
        if (!is_standard(t_))
            throw std::invalid_argument("tableau is not standard: " + t_.to_string());
    }
    explicit StandardTableau(std::vector<std::vector<int>> rows)
        : StandardTableau(RowStandardTableau(std::move(rows))) {}

    static StandardTableau parse(std::string_view text) {
        return StandardTableau(RowStandardTableau::parse(text));
    }

    [[nodiscard]] const RowStandardTableau& row_standard() const { return t_; }
    operator const RowStandardTableau&() const { return t_; } // NOLINT(google-explicit-constructor)

    [[nodiscard]] const YoungDiagram& shape() const { return t_.shape(); }
    [[nodiscard]] int size() const { return t_.size(); }
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return t_.rows(); }
    [[nodiscard]] int row_of(int entry) const { return t_.row_of(entry); }
    [[nodiscard]] int column_of(int entry) const { return t_.column_of(entry); }
    [[nodiscard]] std::pair<int, int> position_of(int entry) const { return t_.position_of(entry); }
    [[nodiscard]] int entry_at(int row, int col) const { return t_.entry_at(row, col); }
    [[nodiscard]] std::string to_string() const { return t_.to_string(); }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.t_ == b.t_;
    }
    friend bool operator!=(const StandardTableau& a, const StandardTableau& b) {
        return !(a == b);
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.t_ < b.t_;
    }

private:
    RowStandardTableau t_;
};

/// Standardization: sort the entries of each column increasingly. The rows
/// remain increasing, so the result is standard.
inline StandardTableau standardize(const RowStandardTableau& t) {
    auto rows = t.rows();
    const auto cols = t.shape().columns();
    for (int q = 0; q < static_cast<int>(cols.size()); ++q) {
        std::vector<int> column;
        column.reserve(cols[q]);
        for (int p = 0; p < cols[q]; ++p) column.push_back(rows[p][q]);
        std::sort(column.begin(), column.end());
        for (int p = 0; p < cols[q]; ++p) rows[p][q] = column[p];
    }
    return StandardTableau(std::move(rows));
}

/// The dual tableau: replace each entry i by n-i+1, then reverse every row
/// so it increases again. An involution that preserves the shape.
inline RowStandardTableau s_dual(const RowStandardTableau& t) {
    const int n = t.size();
    auto rows = t.rows();
    for (auto& row : rows) {
        for (int& e : row) e = n - e + 1;
        std::reverse(row.begin(), row.end());
    }
    return RowStandardTableau(std::move(rows));
}

/// Transposition: row p becomes column p. Standardness is preserved and the
/// shape is transposed. An involution.
inline StandardTableau transpose_tableau(const StandardTableau& t) {
    const auto cols = t.shape().columns();
    std::vector<std::vector<int>> rows(cols.size());
    for (int q = 0; q < static_cast<int>(cols.size()); ++q) {
        rows[q].reserve(cols[q]);
        for (int p = 1; p <= cols[q]; ++p) rows[q].push_back(t.entry_at(p, q + 1));
    }
    return StandardTableau(std::move(rows));
}

/// Subtableau relation: `inner` is a subtableau of `outer` when, for all
/// entries i, j of `inner`, they share a row of `inner` exactly when they
/// share a row of `outer`.
inline bool contains_subtableau(const RowStandardTableau& outer,
                                const RowStandardTableau& inner) {
    const int k = inner.size();
    if (k > outer.size())
        throw std::invalid_argument("contains_subtableau: inner tableau is larger");
    for (int e = 2; e <= k; ++e)
        for (int f = 1; f < e; ++f)
            if ((inner.row_of(e) == inner.row_of(f)) != (outer.row_of(e) == outer.row_of(f)))
                return false;
    return true;
}

/// Row-permutation equivalence: equal multisets of rows.
inline bool row_equivalent(const RowStandardTableau& a, const RowStandardTableau& b) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("row_equivalent: shape mismatch");
    auto ra = a.rows();
    auto rb = b.rows();
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    return ra == rb;
}

/// Shapes of the subtableaux of entries 1..i, for i = 1..n. An increasing
/// chain of diagrams ending at the shape of t.
inline std::vector<YoungDiagram> prefix_shapes(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> counts;
    std::vector<YoungDiagram> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const int p = t.row_of(i);
        if (p > static_cast<int>(counts.size())) counts.resize(p, 0);
        ++counts[p - 1];
        out.emplace_back(counts);
    }
    return out;
}

/// Entries in (lo, hi] with lo subtracted, rows kept in their original order
/// and empty rows dropped. The surviving row lengths must form a valid shape.
inline RowStandardTableau take_range(const RowStandardTableau& t, int lo, int hi) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : t.rows()) {
        std::vector<int> kept;
        for (int e : row)
            if (e > lo && e <= hi) kept.push_back(e - lo);
        if (!kept.empty()) rows.push_back(std::move(kept));
    }
    return RowStandardTableau(std::move(rows));
}

inline RowStandardTableau RowStandardTableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows(1);
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw std::invalid_argument("tableau: empty entry in \"" + std::string(text) + "\"");
        rows.back().push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') {
            flush();
        } else if (c == '/') {
            flush();
            rows.emplace_back();
        } else if (c >= '0' && c <= '9') {
            token += c;
        } else {
            throw std::invalid_argument(std::string("tableau: unexpected character '") + c + "'");
        }
    }
    flush();
    return RowStandardTableau(std::move(rows));
}

} // namespace springer
