#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/extint.hpp"
#include "springer/jdt.hpp"
#include "springer/tableaux.hpp"

namespace springer {

enum class Criterion { dominance, hook_A, two_row_A, two_col_A, constructible };

inline const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::dominance: return "dominance";
        case Criterion::hook_A: return "hook_A";
        case Criterion::two_row_A: return "two_row_A";
        case Criterion::two_col_A: return "two_col_A";
        case Criterion::constructible: return "constructible";
    }
    return "?";
}

/// Decision plus evidence. For the dominance criterion a negative verdict
/// carries the lexicographically first failing (i, j) pair.
struct MembershipVerdict {
    bool member = false;
    Criterion criterion = Criterion::dominance;
    std::optional<std::pair<int, int>> witness;
};

namespace detail {

inline void require_same_shape(const RowStandardTableau& tau, const StandardTableau& t,
                               const char* who) {
    if (tau.shape() != t.shape())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

} // namespace detail

/// Dominance test against a precomputed quotient table of the standard
/// tableau: member iff the interval row counts of tau are dominated by the
/// rectified interval shapes of t for every 0 <= i < j <= n.
inline MembershipVerdict dominance_member(const RowStandardTableau& tau,
                                          const QuotientTable& table) {
    const int n = tau.size();
    if (table.size() != n)
        throw std::invalid_argument("dominance_member: size mismatch");
    const int nrows = tau.shape().row_count();
    std::vector<int> counts(nrows);
    std::vector<int> sorted;
    sorted.reserve(nrows);
    for (int i = 0; i < n; ++i) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int j = i + 1; j <= n; ++j) {
            ++counts[tau.row_of(j) - 1];
            sorted.assign(counts.begin(), counts.end());
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
            if (!detail::dominates_rows(sorted, table.at(i, j).rows()))
                return {false, Criterion::dominance, std::make_pair(i, j)};
        }
    }
    return {true, Criterion::dominance, std::nullopt};
}

inline MembershipVerdict dominance_member(const RowStandardTableau& tau,
                                          const StandardTableau& t) {
    detail::require_same_shape(tau, t, "dominance_member");
    return dominance_member(tau, QuotientTable(t));
}

/// Hook-shape criterion: the first-row entries a of t and a' of tau must
/// interlace as a'_{q-1} < a_q <= a'_q for q = 2..s.
inline bool hook_A(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "hook_A");
    if (!classify(tau.shape()).hook)
        throw std::invalid_argument("hook_A: shape is not of hook type");
    const auto& a = t.rows()[0];
    const auto& ap = tau.rows()[0];
    for (std::size_t q = 1; q < a.size(); ++q)
        if (!(ap[q - 1] < a[q] && a[q] <= ap[q])) return false;
    return true;
}

namespace detail {

/// True when the entries 1..i fill two rows of length i/2 in t.
inline bool rectangular_prefix(const RowStandardTableau& t, int i) {
    if (i % 2 != 0 || t.shape().row_count() < 2) return false;
    int first = 0;
    for (int e = 1; e <= i; ++e)
        if (t.row_of(e) == 1) ++first;
    return first * 2 == i;
}

/// Admission test for the two-row reduction: either some prefix 1..i fills a
/// two-row rectangle in both tableaux, or no prefix of t is such a rectangle
/// and the entry 1 sits in the first row of both.
inline bool two_row_admissible(const RowStandardTableau& tau, const StandardTableau& t) {
    const int n = tau.size();
    for (int i = 2; i <= n; i += 2)
        if (rectangular_prefix(t, i) && rectangular_prefix(tau, i)) return true;
    for (int i = 2; i <= n; i += 2)
        if (rectangular_prefix(t, i)) return false;
    return tau.row_of(1) == 1;
}

inline RowStandardTableau swap_two_rows(const RowStandardTableau& t) {
    auto rows = t.rows();
    std::swap(rows[0], rows[1]);
    return RowStandardTableau(std::move(rows));
}

} // namespace detail

/// One reduction step of the two-row criterion. Returns one or two smaller
/// pairs; throws when the pair is not admissible.
inline std::vector<std::pair<RowStandardTableau, StandardTableau>>
two_row_eta(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "two_row_eta");
    if (tau.shape().row_count() > 2)
        throw std::invalid_argument("two_row_eta: shape has more than two rows");
    if (!detail::two_row_admissible(tau, t))
        throw std::domain_error("two_row_eta: pair fails the two-row reduction preconditions");

    const int n = tau.size();
    int split = 0; // largest i < n with a common rectangular prefix
    bool full_rectangle = false;
    for (int i = 2; i <= n; i += 2) {
        if (detail::rectangular_prefix(t, i) && detail::rectangular_prefix(tau, i)) {
            if (i < n)
                split = i;
            else
                full_rectangle = true;
        }
    }

    if (split > 0) {
        // Split at the largest common rectangle below n.
        auto tau1 = take_range(tau, 0, split);
        auto t1 = StandardTableau(take_range(t, 0, split));
        auto tau2 = take_range(tau, split, n);
        auto t2 = StandardTableau(take_range(t, split, n));
        return {{std::move(tau1), std::move(t1)}, {std::move(tau2), std::move(t2)}};
    }
    if (full_rectangle) {
        // Drop the entry n; swap the (equal-length) rows of tau first if n
        // sits in its first row.
        auto t1 = StandardTableau(take_range(t, 0, n - 1));
        auto base = tau.row_of(n) == 2 ? tau : detail::swap_two_rows(tau);
        return {{take_range(base, 0, n - 1), std::move(t1)}};
    }
    // Strip the entry 1 from the head of both first rows and renumber.
    auto tau1 = take_range(tau, 1, n);
    auto t1 = StandardTableau(take_range(t, 1, n));
    return {{std::move(tau1), std::move(t1)}};
}

/// Inductive two-row criterion: accept the one-box pair; otherwise require
/// admissibility and acceptance of every reduced pair.
inline bool two_row_A(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "two_row_A");
    if (tau.shape().row_count() > 2)
        throw std::invalid_argument("two_row_A: shape has more than two rows");
    std::vector<std::pair<RowStandardTableau, StandardTableau>> work;
    work.emplace_back(tau, t);
    while (!work.empty()) {
        auto [a, b] = std::move(work.back());
        work.pop_back();
        if (a.size() == 1) continue;
        if (!detail::two_row_admissible(a, b)) return false;
        for (auto& child : two_row_eta(a, b)) work.push_back(std::move(child));
    }
    return true;
}

namespace detail {

/// Data of the two-column admission test: the minimal entry i placed in
/// different columns, the minimal j in the second column of tau whose left
/// neighbour is <= i, and whether a first-column entry between them keeps an
/// open right end beyond j.
struct TwoColStep {
    int i = 0;
    int j = 0;
    bool admissible = false;
};

inline TwoColStep two_col_examine(const RowStandardTableau& tau, const StandardTableau& t) {
    TwoColStep s;
    const int n = tau.size();
    int i = 0;
    for (int e = 1; e <= n; ++e) {
        if (tau.column_of(e) != t.column_of(e)) {
            i = e;
            break;
        }
    }
    if (i == 0) return s; // st(tau) == t; not admissible but accepted upstream
    s.i = i;
    if (!(tau.column_of(i) == 1 && t.column_of(i) == 2)) return s;
    for (int j = i + 1; j <= n; ++j) {
        if (tau.column_of(j) == 2 && tau.entry_at(tau.row_of(j), 1) <= i) {
            s.j = j;
            break;
        }
    }
    if (s.j == 0) return s;
    for (int e = i; e < s.j; ++e) {
        if (tau.column_of(e) == 1 && tau.right_neighbor(e) > ExtInt(s.j)) {
            s.admissible = true;
            return s;
        }
    }
    return s;
}

} // namespace detail

/// One reduction step of the two-column criterion: returns (tau~, t) where
/// tau~ is tau with two entries exchanged. Throws when the pair is not
/// admissible (in particular when t = st(tau), where no step is needed).
inline std::pair<RowStandardTableau, StandardTableau>
two_col_eta(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "two_col_eta");
    if (tau.shape().row(1) > 2)
        throw std::invalid_argument("two_col_eta: shape has more than two columns");
    const auto step = detail::two_col_examine(tau, t);
    if (!step.admissible)
        throw std::domain_error("two_col_eta: pair fails the two-column reduction preconditions");

    const int i = step.i;
    const int j = step.j;
    const ExtInt wi = tau.right_neighbor(i);
    int partner = 0;
    for (int e = i + 1; e < j; ++e) {
        if (tau.column_of(e) == 1 && wi < tau.right_neighbor(e)) {
            partner = e;
            break;
        }
    }
    if (partner == 0) partner = j;

    auto rows = tau.rows();
    auto pi = tau.position_of(i);
    auto pp = tau.position_of(partner);
    rows[pi.first - 1][pi.second - 1] = partner;
    rows[pp.first - 1][pp.second - 1] = i;
    return {RowStandardTableau(std::move(rows)), t};
}

/// Inductive two-column criterion: accept when t = st(tau); otherwise the
/// pair must be admissible and its reduction accepted. The pair (i, right
/// neighbour of i) strictly increases, so the loop terminates.
inline bool two_col_A(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "two_col_A");
    if (tau.shape().row(1) > 2)
        throw std::invalid_argument("two_col_A: shape has more than two columns");
    const int n = tau.size();
    RowStandardTableau cur = tau;
    for (long guard = 0; guard <= static_cast<long>(n + 1) * (n + 1); ++guard) {
        if (standardize(cur) == t) return true;
        if (!detail::two_col_examine(cur, t).admissible) return false;
        cur = two_col_eta(cur, t).first;
    }
    throw std::logic_error("two_col_A: reduction did not terminate");
}

/// For a standard tableau of two-column shape the full dominance test
/// collapses to prefix-shape dominance at every i.
inline bool two_col_standard_member(const StandardTableau& s, const StandardTableau& t) {
    if (s.shape() != t.shape())
        throw std::invalid_argument("two_col_standard_member: shape mismatch");
    if (s.shape().row(1) > 2)
        throw std::invalid_argument("two_col_standard_member: shape has more than two columns");
    const auto ps = prefix_shapes(s);
    const auto pt = prefix_shapes(t);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!dominates(ps[i], pt[i])) return false;
    return true;
}

/// Decides tau ∈ t on the hook, two-row and two-column families via the
/// dominance criterion. Shapes outside all three families are refused: the
/// dominance test is only a necessary condition there.
inline MembershipVerdict member(const RowStandardTableau& tau, const StandardTableau& t) {
    detail::require_same_shape(tau, t, "member");
    if (!classify(tau.shape()).any())
        throw std::domain_error("member: membership undecided for general shapes");
    return dominance_member(tau, t);
}

inline MembershipVerdict member(const RowStandardTableau& tau, const StandardTableau& t,
                                const QuotientTable& table) {
    detail::require_same_shape(tau, t, "member");
    if (!classify(tau.shape()).any())
        throw std::domain_error("member: membership undecided for general shapes");
    return dominance_member(tau, table);
}

} // namespace springer
