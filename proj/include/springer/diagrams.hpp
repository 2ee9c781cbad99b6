#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// A Young diagram: left-justified rows of boxes with weakly decreasing
/// lengths. The empty diagram (no boxes) is allowed.
///
/// Rows are primary storage; column lengths are derived on demand.
/// Values are immutable after construction.
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            if (rows_[p] < 1)
                throw std::invalid_argument("young diagram: row lengths must be positive");
            if (p > 0 && rows_[p] > rows_[p - 1])
                throw std::invalid_argument("young diagram: row lengths must be weakly decreasing");
        }
        n_ = std::accumulate(rows_.begin(), rows_.end(), 0);
    }

    /// Parses comma-separated row lengths, e.g. "5,4" or "2,2,1".
    static YoungDiagram parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& rows() const { return rows_; }
    [[nodiscard]] int row_count() const { return static_cast<int>(rows_.size()); }

    /// Length of the p-th row (1-based); 0 beyond the last row.
    [[nodiscard]] int row(int p) const {
        return (p >= 1 && p <= row_count()) ? rows_[p - 1] : 0;
    }

    /// Total box count.
    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] bool empty() const { return n_ == 0; }

    /// Column lengths, longest first.
    [[nodiscard]] std::vector<int> columns() const {
        std::vector<int> cols(rows_.empty() ? 0 : rows_[0], 0);
        for (int len : rows_)
            for (int q = 0; q < len; ++q) ++cols[q];
        return cols;
    }

    [[nodiscard]] YoungDiagram transposed() const {
        return YoungDiagram(columns());
    }

    /// True when the box (p, q) (both 1-based) lies in the diagram.
    [[nodiscard]] bool contains(int p, int q) const {
        return p >= 1 && q >= 1 && q <= row(p);
    }

    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            if (p > 0) out += ',';
            out += std::to_string(rows_[p]);
        }
        return out;
    }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) {
        return !(a == b);
    }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ < b.rows_;
    }

private:
    std::vector<int> rows_;
    int n_ = 0;
};

/// Which of the three special shape families a diagram belongs to.
/// A shape may lie in several families; all flags false means general shape.
struct ShapeFamily {
    bool hook = false;
    bool two_row = false;
    bool two_column = false;

    [[nodiscard]] bool any() const { return hook || two_row || two_column; }
};

inline ShapeFamily classify(const YoungDiagram& y) {
    ShapeFamily f;
    int wide_rows = 0;
    for (int len : y.rows())
        if (len >= 2) ++wide_rows;
    f.hook = wide_rows <= 1;
    f.two_row = y.row_count() <= 2;
    f.two_column = y.rows().empty() || y.rows()[0] <= 2;
    return f;
}

namespace detail {

/// Dominance on raw row-length sequences (weakly decreasing, equal sums
/// assumed). Shorter sequence is padded with zeros.
inline bool dominates_rows(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t len = std::max(a.size(), b.size());
    long sa = 0;
    long sb = 0;
    for (std::size_t p = 0; p < len; ++p) {
        sa += p < a.size() ? a[p] : 0;
        sb += p < b.size() ? b[p] : 0;
        if (sa > sb) return false;
    }
    return true;
}

} // namespace detail

/// Dominance order: returns y ⪯ y2, i.e. every prefix sum of the rows of y
/// is bounded by the corresponding prefix sum for y2.
/// Defined only between diagrams with the same box count.
inline bool dominates(const YoungDiagram& y, const YoungDiagram& y2) {
    if (y.size() != y2.size())
        throw std::invalid_argument("dominates: incomparable sizes");
    return detail::dominates_rows(y.rows(), y2.rows());
}

/// Dimension of the Springer fiber over a nilpotent with Jordan shape y:
/// the sum over the columns of length c of c*(c-1)/2.
inline long springer_dim(const YoungDiagram& y) {
    long dim = 0;
    for (int c : y.columns()) dim += static_cast<long>(c) * (c - 1) / 2;
    return dim;
}

inline YoungDiagram YoungDiagram::parse(std::string_view text) {
    std::vector<int> rows;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw std::invalid_argument("shape: empty row length in \"" + std::string(text) + "\"");
        rows.push_back(std::stoi(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') {
            flush();
        } else if (c >= '0' && c <= '9') {
            token += c;
        } else {
            throw std::invalid_argument(std::string("shape: unexpected character '") + c + "'");
        }
    }
    flush();
    return YoungDiagram(std::move(rows));
}

} // namespace springer
