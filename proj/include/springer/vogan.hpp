#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/diagrams.hpp"
#include "springer/enumerate.hpp"
#include "springer/tableaux.hpp"

namespace springer {

/// Descents of a standard tableau: the i with i+1 strictly below i's row.
inline std::vector<int> descents(const StandardTableau& t) {
    std::vector<int> out;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i) < t.row_of(i + 1)) out.push_back(i);
    return out;
}

namespace detail {

inline bool is_descent(const StandardTableau& t, int i) {
    return i >= 1 && i < t.size() && t.row_of(i) < t.row_of(i + 1);
}

inline StandardTableau swap_entries(const StandardTableau& t, int a, int b) {
    auto rows = t.rows();
    auto pa = t.position_of(a);
    auto pb = t.position_of(b);
    rows[pa.first - 1][pa.second - 1] = b;
    rows[pb.first - 1][pb.second - 1] = a;
    return StandardTableau(std::move(rows));
}

} // namespace detail

/// Domain of the paired-swap transformation at i, forward direction:
/// i+1 is a descent but i is not. Backward: i is a descent but i+1 is not.
inline bool in_swap_domain(const StandardTableau& t, int i, bool forward) {
    if (i < 1 || i + 2 > t.size()) return false;
    if (forward) return detail::is_descent(t, i + 1) && !detail::is_descent(t, i);
    return detail::is_descent(t, i) && !detail::is_descent(t, i + 1);
}

/// The paired-swap bijection at i: exchanges either i+1,i+2 or i,i+1,
/// depending on the rows of i and i+2. Forward and backward directions are
/// mutually inverse.
inline StandardTableau vogan_t_ab(const StandardTableau& t, int i, bool forward) {
    if (!in_swap_domain(t, i, forward))
        throw std::domain_error("vogan_t_ab: tableau outside the domain at i=" +
                                std::to_string(i));
    const bool lower = t.row_of(i) < t.row_of(i + 2);
    if (forward)
        return lower ? detail::swap_entries(t, i + 1, i + 2)
                     : detail::swap_entries(t, i, i + 1);
    return lower ? detail::swap_entries(t, i, i + 1)
                 : detail::swap_entries(t, i + 1, i + 2);
}

/// Domain of the single-swap transformation: 2 <= i <= n-1 and i, i+1 in
/// different rows and different columns.
inline bool in_single_swap_domain(const StandardTableau& t, int i) {
    if (i < 2 || i > t.size() - 1) return false;
    return t.row_of(i) != t.row_of(i + 1) && t.column_of(i) != t.column_of(i + 1);
}

/// Swaps i and i+1; both orders stay standard on the domain.
inline StandardTableau vogan_t_i(const StandardTableau& t, int i) {
    if (!in_single_swap_domain(t, i))
        throw std::domain_error("vogan_t_i: tableau outside the domain at i=" +
                                std::to_string(i));
    return detail::swap_entries(t, i, i + 1);
}

/// One recorded transformation in the provenance of a pair.
struct VoganOp {
    int i = 0;
    bool forward = true;
};

/// An unordered pair of standard tableaux reachable from a seed
/// (T, single-swap of T) by applying paired swaps to both members at once.
struct VoganPair {
    StandardTableau first;
    StandardTableau second;

    StandardTableau seed;     // the tableau whose single swap opened the pair
    int seed_i = 0;           // position of that single swap
    std::vector<VoganOp> ops; // paired swaps applied to both members

    [[nodiscard]] std::pair<StandardTableau, StandardTableau> replay() const {
        StandardTableau a = seed;
        StandardTableau b = vogan_t_i(seed, seed_i);
        for (const auto& op : ops) {
            a = vogan_t_ab(a, op.i, op.forward);
            b = vogan_t_ab(b, op.i, op.forward);
        }
        if (b < a) std::swap(a, b);
        return {a, b};
    }
};

/// Closure of the seed pairs under simultaneous paired swaps, collected as
/// unordered pairs and sorted.
inline std::vector<VoganPair> vogan_set(const YoungDiagram& shape) {
    const auto tableaux = enumerate_standard(shape);
    const int n = shape.size();

    using Key = std::pair<std::string, std::string>;
    auto key_of = [](const StandardTableau& a, const StandardTableau& b) {
        return a < b ? Key{a.to_string(), b.to_string()} : Key{b.to_string(), a.to_string()};
    };

    std::map<Key, VoganPair> found;
    std::vector<VoganPair> frontier;
    for (const auto& t : tableaux) {
        for (int i = 2; i <= n - 1; ++i) {
            if (!in_single_swap_domain(t, i)) continue;
            StandardTableau other = vogan_t_i(t, i);
            VoganPair pair{t, other, t, i, {}};
            if (other < pair.first) std::swap(pair.first, pair.second);
            auto key = key_of(pair.first, pair.second);
            if (found.emplace(key, pair).second) frontier.push_back(std::move(pair));
        }
    }

    while (!frontier.empty()) {
        std::vector<VoganPair> next;
        for (const auto& pair : frontier) {
            for (int i = 1; i + 2 <= n; ++i) {
                for (bool forward : {true, false}) {
                    if (!in_swap_domain(pair.first, i, forward) ||
                        !in_swap_domain(pair.second, i, forward))
                        continue;
                    VoganPair child{vogan_t_ab(pair.first, i, forward),
                                    vogan_t_ab(pair.second, i, forward),
                                    pair.seed,
                                    pair.seed_i,
                                    pair.ops};
                    child.ops.push_back({i, forward});
                    if (child.second < child.first) std::swap(child.first, child.second);
                    auto key = key_of(child.first, child.second);
                    if (found.emplace(key, child).second) next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<VoganPair> out;
    out.reserve(found.size());
    for (auto& [key, pair] : found) out.push_back(std::move(pair));
    return out;
}

} // namespace springer
