#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "springer/constructibility.hpp"
#include "springer/diagrams.hpp"
#include "springer/enumerate.hpp"
#include "springer/jdt.hpp"
#include "springer/meanders.hpp"
#include "springer/membership.hpp"
#include "springer/tableaux.hpp"
#include "springer/vogan.hpp"

namespace springer {

/// Cached enumeration data for one shape: every tableau, the quotient
/// tables, and the full membership matrix (row-standard x standard).
class ShapeUniverse {
public:
    struct ShapeData {
        YoungDiagram shape;
        std::vector<RowStandardTableau> rs;
        std::vector<StandardTableau> st;
        std::unordered_map<std::string, int> rs_index;
        std::unordered_map<std::string, int> st_index;
        std::vector<QuotientTable> tables;      // per standard tableau
        std::vector<std::vector<char>> member;  // member[rs][st]

        [[nodiscard]] int rs_of(const RowStandardTableau& t) const {
            auto it = rs_index.find(t.to_string());
            if (it == rs_index.end())
                throw std::logic_error("shape universe: unknown row-standard tableau");
            return it->second;
        }
        [[nodiscard]] int st_of(const StandardTableau& t) const {
            auto it = st_index.find(t.to_string());
            if (it == st_index.end())
                throw std::logic_error("shape universe: unknown standard tableau");
            return it->second;
        }
    };

    const ShapeData& get(const YoungDiagram& shape) {
        const std::string key = shape.to_string();
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;

        auto data = std::make_unique<ShapeData>();
        data->shape = shape;
        data->rs = enumerate_row_standard(shape);
        data->st = enumerate_standard(shape);
        for (int k = 0; k < static_cast<int>(data->rs.size()); ++k)
            data->rs_index.emplace(data->rs[k].to_string(), k);
        for (int k = 0; k < static_cast<int>(data->st.size()); ++k)
            data->st_index.emplace(data->st[k].to_string(), k);
        data->tables.reserve(data->st.size());
        for (const auto& t : data->st) data->tables.emplace_back(t);
        data->member.assign(data->rs.size(), std::vector<char>(data->st.size(), 0));
        for (std::size_t a = 0; a < data->rs.size(); ++a)
            for (std::size_t b = 0; b < data->st.size(); ++b)
                data->member[a][b] =
                    dominance_member(data->rs[a], data->tables[b]).member ? 1 : 0;

        auto [pos, inserted] = cache_.emplace(key, std::move(data));
        (void)inserted;
        return *pos->second;
    }

private:
    std::unordered_map<std::string, std::unique_ptr<ShapeData>> cache_;
};

struct CheckResult {
    std::string name;
    long population = 0;
    std::vector<std::string> failures;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

struct ValidationReport {
    YoungDiagram shape;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.ok(); });
    }

    [[nodiscard]] std::string to_table() const {
        std::ostringstream out;
        out << "shape " << shape.to_string() << "\n";
        for (const auto& c : checks) {
            out << "  " << (c.ok() ? "pass" : "FAIL") << "  " << c.name << "  (population "
                << c.population << ")\n";
            for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k)
                out << "        " << c.failures[k] << "\n";
            if (c.failures.size() > 5)
                out << "        ... " << c.failures.size() - 5 << " more\n";
        }
        return out.str();
    }

    [[nodiscard]] std::string to_machine() const {
        std::ostringstream out;
        for (const auto& c : checks) {
            out << "check\t" << shape.to_string() << "\t" << c.name << "\tpopulation="
                << c.population << "\tfailures=" << c.failures.size() << "\n";
            for (const auto& f : c.failures)
                out << "failure\t" << shape.to_string() << "\t" << c.name << "\t" << f << "\n";
        }
        return out.str();
    }
};

/// The canonical standard tableau of a two-column shape: first column 1..r,
/// second column r+1..r+s. Its flag lies in every component.
inline StandardTableau two_col_base_tableau(const YoungDiagram& shape) {
    if (shape.row(1) > 2)
        throw std::invalid_argument("two_col_base_tableau: shape has more than two columns");
    const auto cols = shape.columns();
    const int r = cols.empty() ? 0 : cols[0];
    std::vector<std::vector<int>> rows(shape.row_count());
    for (int p = 1; p <= shape.row_count(); ++p) {
        rows[p - 1].push_back(p);
        if (shape.row(p) == 2) rows[p - 1].push_back(r + p);
    }
    return StandardTableau(std::move(rows));
}

/// The explicit pair that satisfies the dominance test without belonging to
/// any component, defined for shapes with first three rows covering (3,2,1)
/// and a strictly longer first row.
inline std::pair<RowStandardTableau, StandardTableau> r_minus_k_pair(const YoungDiagram& shape) {
    const auto& rows = shape.rows();
    if (rows.size() < 3 || rows[0] <= rows[1] || rows[1] < 2 || rows[2] < 1)
        throw std::invalid_argument(
            "r_minus_k_pair: shape must contain 3,2,1 with a strictly longer first row");
    const int l1 = rows[0];
    const int l2 = rows[1];
    const int l3 = rows[2];

    std::vector<std::vector<int>> tau_rows(rows.size());
    std::vector<std::vector<int>> t_rows(rows.size());
    tau_rows[0] = {1, 2, 5};
    t_rows[0] = {1, 2, 5};
    for (int e = 7; e <= l1 + 3; ++e) {
        tau_rows[0].push_back(e);
        t_rows[0].push_back(e);
    }
    tau_rows[1] = {4, 6};
    t_rows[1] = {3, 4};
    for (int e = l1 + 4; e <= l1 + l2 + 1; ++e) {
        tau_rows[1].push_back(e);
        t_rows[1].push_back(e);
    }
    tau_rows[2] = {3};
    t_rows[2] = {6};
    for (int e = l1 + l2 + 2; e <= l1 + l2 + l3; ++e) {
        tau_rows[2].push_back(e);
        t_rows[2].push_back(e);
    }
    int next = l1 + l2 + l3 + 1;
    for (std::size_t p = 3; p < rows.size(); ++p) {
        for (int k = 0; k < rows[p]; ++k) {
            tau_rows[p].push_back(next);
            t_rows[p].push_back(next);
            ++next;
        }
    }
    return {RowStandardTableau(std::move(tau_rows)), StandardTableau(std::move(t_rows))};
}

/// A maximal chain of interval positions: (i_k, j_k) with j_k - i_k = k,
/// i weakly decreasing from some diagonal start to 0, j weakly increasing
/// to n.
struct RhoSequence {
    std::vector<std::pair<int, int>> steps; // k = 0..n

    explicit RhoSequence(std::vector<std::pair<int, int>> s) : steps(std::move(s)) {
        const int n = static_cast<int>(steps.size()) - 1;
        if (n < 0 || steps[0].first != steps[0].second || steps[n].first != 0 ||
            steps[n].second != n)
            throw std::invalid_argument("rho sequence: bad endpoints");
        for (int k = 0; k <= n; ++k) {
            auto [i, j] = steps[k];
            if (i < 0 || j > n || j - i != k)
                throw std::invalid_argument("rho sequence: bad step");
            if (k > 0) {
                const bool dec_i = steps[k - 1].first == i + 1 && steps[k - 1].second == j;
                const bool inc_j = steps[k - 1].first == i && steps[k - 1].second == j - 1;
                if (!dec_i && !inc_j)
                    throw std::invalid_argument("rho sequence: bad transition");
            }
        }
    }
};

/// All such chains for a given n; 2^n of them.
inline std::vector<RhoSequence> enumerate_rho(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_rho: need n >= 1");
    std::vector<RhoSequence> out;
    std::vector<std::pair<int, int>> steps;
    auto rec = [&](auto&& self, int i, int j) -> void {
        steps.emplace_back(i, j);
        if (j - i == n) {
            out.push_back(RhoSequence(steps));
        } else {
            if (i > 0) self(self, i - 1, j);
            if (j < n) self(self, i, j + 1);
        }
        steps.pop_back();
    };
    for (int start = 0; start <= n; ++start) rec(rec, start, start);
    return out;
}

/// Verifies the six-box counterexample pair: all interval shapes of S are
/// dominated by those of T although T != S, and along every maximal chain
/// the length-five comparison is strict.
inline bool remark_89_check() {
    const StandardTableau t({{1, 2, 5}, {3, 4}, {6}});
    const StandardTableau s({{1, 2, 5}, {3, 6}, {4}});
    if (t == s) return false;
    const QuotientTable qt(t);
    const QuotientTable qs(s);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            if (!dominates(qs.at(i, j), qt.at(i, j))) return false;
    for (const auto& rho : enumerate_rho(6)) {
        auto [i5, j5] = rho.steps[5];
        if (!(dominates(qs.at(i5, j5), qt.at(i5, j5)) && qs.at(i5, j5) != qt.at(i5, j5)))
            return false;
    }
    return true;
}

/// Intersection graph of a shape: nodes are the standard tableaux, an edge
/// joins two components that share a standard member, annotated with the
/// family codimension-one classification.
struct IntersectionGraph {
    YoungDiagram shape;
    std::vector<StandardTableau> nodes;
    struct Edge {
        int a = 0;
        int b = 0;
        bool codim_one = false;
    };
    std::vector<Edge> edges;

    [[nodiscard]] std::string to_dot() const {
        std::ostringstream out;
        out << "graph intersections {\n";
        out << "  label=\"" << shape.to_string() << "\";\n";
        for (const auto& t : nodes) out << "  \"" << t.to_string() << "\";\n";
        for (const auto& e : edges)
            out << "  \"" << nodes[e.a].to_string() << "\" -- \"" << nodes[e.b].to_string()
                << "\" [label=\"" << (e.codim_one ? "codim 1" : "nonempty") << "\"];\n";
        out << "}\n";
        return out.str();
    }
};

namespace detail {

/// Codimension-one test for a pair of standard tableaux, running every
/// classifier the shape admits and demanding agreement.
inline bool codim_one_all_families(const StandardTableau& a, const StandardTableau& b) {
    const auto fam = classify(a.shape());
    std::vector<bool> votes;
    if (fam.two_row) votes.push_back(intersection_2row(a, b).codim_one);
    if (fam.hook) votes.push_back(hook_intersection(a, b).codim_one);
    if (fam.two_column) votes.push_back(two_col_codim_one(a, b));
    if (votes.empty())
        throw std::domain_error("codim-one classification undecided for general shapes");
    for (bool v : votes)
        if (v != votes[0])
            throw std::logic_error("codim-one classifiers disagree on shape " +
                                   a.shape().to_string());
    return votes[0];
}

} // namespace detail

inline IntersectionGraph intersection_graph(const YoungDiagram& shape, ShapeUniverse& universe) {
    if (!classify(shape).any())
        throw std::domain_error("intersection_graph: general shapes are not supported");
    const auto& data = universe.get(shape);
    IntersectionGraph g;
    g.shape = shape;
    g.nodes = data.st;
    const bool two_row = shape.row_count() <= 2;
    const int m = static_cast<int>(data.st.size());
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            bool nonempty = false;
            for (std::size_t s = 0; s < data.rs.size() && !nonempty; ++s) {
                if (!is_standard(data.rs[s])) continue;
                nonempty = data.member[s][a] && data.member[s][b];
            }
            if (two_row && nonempty != intersection_2row(data.st[a], data.st[b]).nonempty)
                throw std::logic_error("intersection_graph: shared member != meander evenness");
            if (!nonempty) continue;
            g.edges.push_back({a, b, detail::codim_one_all_families(data.st[a], data.st[b])});
        }
    }
    return g;
}

inline IntersectionGraph intersection_graph(const YoungDiagram& shape) {
    ShapeUniverse universe;
    return intersection_graph(shape, universe);
}

/// All pairs (tau, T) of the shape with tau a member of T's component.
inline std::vector<std::pair<RowStandardTableau, StandardTableau>>
k_pairs(const YoungDiagram& shape, ShapeUniverse& universe) {
    if (!classify(shape).any())
        throw std::domain_error("k_pairs: membership undecided for general shapes");
    const auto& data = universe.get(shape);
    std::vector<std::pair<RowStandardTableau, StandardTableau>> out;
    for (std::size_t a = 0; a < data.rs.size(); ++a)
        for (std::size_t b = 0; b < data.st.size(); ++b)
            if (data.member[a][b]) out.emplace_back(data.rs[a], data.st[b]);
    return out;
}

inline std::vector<std::pair<RowStandardTableau, StandardTableau>>
k_pairs(const YoungDiagram& shape) {
    ShapeUniverse universe;
    return k_pairs(shape, universe);
}

namespace detail {

/// Restriction of tau to the entries 1..k as a valid tableau: rows sorted by
/// decreasing surviving length, ties by first entry.
inline RowStandardTableau restrict_sorted(const RowStandardTableau& tau, int k) {
    std::vector<std::vector<int>> rows;
    for (const auto& row : tau.rows()) {
        std::vector<int> kept;
        for (int e : row)
            if (e <= k) kept.push_back(e);
        if (!kept.empty()) rows.push_back(std::move(kept));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return RowStandardTableau(std::move(rows));
}

/// Canonical representative of the row-permutation class: rows of equal
/// length sorted by first entry.
inline std::string row_class_key(const RowStandardTableau& tau) {
    auto rows = tau.rows();
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    std::string key;
    for (const auto& row : rows) {
        for (int e : row) key += std::to_string(e) + ",";
        key += "/";
    }
    return key;
}

using PairSet = std::set<std::pair<std::string, std::string>>;

inline std::pair<std::string, std::string> unordered_key(const StandardTableau& a,
                                                         const StandardTableau& b) {
    std::string x = a.to_string();
    std::string y = b.to_string();
    if (y < x) std::swap(x, y);
    return {x, y};
}

} // namespace detail

/// Which groups of checks to run; the default is everything applicable.
struct CheckSet {
    bool counts = true;       // enumeration sizes against closed forms
    bool equivalence = true;  // dominance = inductive = construction
    bool stability = true;    // standardization, duality, restriction, bridges
    bool intersection = true; // evenness, codimension-one sets
    bool separation = true;   // strict interval separation of distinct tableaux

    static CheckSet all() { return {}; }
    static CheckSet intersection_only() { return {false, false, false, true, false}; }
};

/// Runs every applicable consistency check over all pairs of the shape.
/// The returned report lists populations and failures per check.
inline ValidationReport cross_validate(const YoungDiagram& shape, ShapeUniverse& universe,
                                       const CheckSet& select = CheckSet::all()) {
    const auto family = classify(shape);
    if (!family.any())
        throw std::domain_error("cross_validate: general shapes are not supported");

    const auto suite_start = std::chrono::steady_clock::now();
    ValidationReport report;
    report.shape = shape;

    const auto& data = universe.get(shape);
    const int n = shape.size();
    const int nrs = static_cast<int>(data.rs.size());
    const int nst = static_cast<int>(data.st.size());

    auto run_check = [&](const std::string& name, auto&& body) {
        CheckResult result;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        body(result);
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(result));
    };

    if (select.counts)
    run_check("enumeration-counts", [&](CheckResult& c) {
        c.population = 2;
        if (static_cast<unsigned long long>(nst) != standard_count(shape))
            c.failures.push_back("standard count != hook length formula");
        if (static_cast<unsigned long long>(nrs) != row_standard_count(shape))
            c.failures.push_back("row-standard count != multinomial");
    });

    if (select.equivalence)
    run_check("criteria-equivalence", [&](CheckResult& c) {
        for (int a = 0; a < nrs; ++a) {
            for (int b = 0; b < nst; ++b) {
                ++c.population;
                const bool dom = data.member[a][b];
                const auto& tau = data.rs[a];
                const auto& t = data.st[b];
                auto complain = [&](const char* what) {
                    c.failures.push_back(tau.to_string() + " | " + t.to_string() + ": " + what);
                };
                if (family.hook) {
                    if (hook_A(tau, t) != dom) complain("hook_A != dominance");
                    if (construct_hook(tau, t).success != dom)
                        complain("hook construction != dominance");
                }
                if (family.two_row) {
                    if (two_row_A(tau, t) != dom) complain("two_row_A != dominance");
                    if (construct_two_row(tau, t).success != dom)
                        complain("two-row construction != dominance");
                }
                if (family.two_column) {
                    if (two_col_A(tau, t) != dom) complain("two_col_A != dominance");
                    if (construct_two_col(tau, t).success != dom)
                        complain("two-column construction != dominance");
                }
            }
        }
    });

    if (select.stability)
    run_check("standardization-membership", [&](CheckResult& c) {
        for (int a = 0; a < nrs; ++a) {
            ++c.population;
            const int b = data.st_of(standardize(data.rs[a]));
            if (!data.member[a][b])
                c.failures.push_back(data.rs[a].to_string() + ": not a member of its own class");
        }
    });

    if (select.stability)
    run_check("standardization-implication", [&](CheckResult& c) {
        for (int a = 0; a < nrs; ++a) {
            const int sa = data.rs_of(standardize(data.rs[a]).row_standard());
            for (int b = 0; b < nst; ++b) {
                ++c.population;
                if (data.member[a][b] && !data.member[sa][b])
                    c.failures.push_back(data.rs[a].to_string() + " | " + data.st[b].to_string() +
                                         ": standardization left the component");
            }
        }
    });

    if (select.stability)
    run_check("row-swap-invariance", [&](CheckResult& c) {
        std::unordered_map<std::string, int> representative;
        for (int a = 0; a < nrs; ++a) {
            ++c.population;
            const auto key = detail::row_class_key(data.rs[a]);
            auto [it, fresh] = representative.emplace(key, a);
            if (fresh) continue;
            if (data.member[a] != data.member[it->second])
                c.failures.push_back(data.rs[a].to_string() + " vs " +
                                     data.rs[it->second].to_string() +
                                     ": row-equivalent tableaux disagree");
        }
    });

    if (select.stability)
    run_check("duality-stability", [&](CheckResult& c) {
        std::vector<int> dual_st(nst);
        for (int b = 0; b < nst; ++b) dual_st[b] = data.st_of(schuetzenberger(data.st[b]));
        for (int a = 0; a < nrs; ++a) {
            const int da = data.rs_of(s_dual(data.rs[a]));
            for (int b = 0; b < nst; ++b) {
                ++c.population;
                if (data.member[a][b] != data.member[da][dual_st[b]])
                    c.failures.push_back(data.rs[a].to_string() + " | " + data.st[b].to_string() +
                                         ": duality changed the verdict");
            }
        }
    });

    if (select.stability)
    run_check("subtableau-induction", [&](CheckResult& c) {
        if (n < 2) return;
        // Restrictions of tau to 1..k do not depend on the standard partner;
        // resolve each one once per (tau, k) and compare verdicts by lookup.
        std::unordered_map<std::string, const ShapeUniverse::ShapeData*> subs;
        auto sub_of = [&](const YoungDiagram& y) {
            auto [it, fresh] = subs.emplace(y.to_string(), nullptr);
            if (fresh) it->second = &universe.get(y);
            return it->second;
        };

        // For each standard tableau and level k: the sub-universe of the
        // prefix shape and the index of the prefix tableau there.
        std::vector<std::vector<std::pair<const ShapeUniverse::ShapeData*, int>>> t_pref(nst);
        std::vector<std::vector<YoungDiagram>> t_shapes(nst);
        for (int b = 0; b < nst; ++b) {
            t_shapes[b] = prefix_shapes(data.st[b]);
            t_pref[b].resize(n);
            for (int k = 1; k < n; ++k) {
                const auto* sub = sub_of(t_shapes[b][k - 1]);
                t_pref[b][k] = {sub, sub->st_of(StandardTableau(take_range(data.st[b], 0, k)))};
            }
        }

        std::vector<std::string> rest_shape(n);
        std::vector<int> rest_index(n);
        for (int a = 0; a < nrs; ++a) {
            const auto& tau = data.rs[a];
            for (int k = 1; k < n; ++k) {
                const auto restricted = detail::restrict_sorted(tau, k);
                rest_shape[k] = restricted.shape().to_string();
                rest_index[k] = sub_of(restricted.shape())->rs_of(restricted);
            }
            for (int b = 0; b < nst; ++b) {
                const auto& t = data.st[b];
                bool same_col_suffix = true;
                for (int k = n - 1; k >= 1; --k) {
                    same_col_suffix =
                        same_col_suffix && tau.column_of(k + 1) == t.column_of(k + 1);
                    if (rest_shape[k] != t_shapes[b][k - 1].to_string()) continue;
                    ++c.population;
                    const auto [sub, tb] = t_pref[b][k];
                    const bool small = sub->member[rest_index[k]][tb];
                    if (data.member[a][b] && !small)
                        c.failures.push_back(tau.to_string() + " | " + t.to_string() + " at " +
                                             std::to_string(k) + ": restriction left the component");
                    if (same_col_suffix && small && !data.member[a][b])
                        c.failures.push_back(tau.to_string() + " | " + t.to_string() + " at " +
                                             std::to_string(k) +
                                             ": aligned extension left the component");
                }
            }
        }
    });

    if (family.two_column && select.stability) {
        run_check("standard-two-column-prefix", [&](CheckResult& c) {
            for (int a = 0; a < nst; ++a) {
                const int ra = data.rs_of(data.st[a].row_standard());
                for (int b = 0; b < nst; ++b) {
                    ++c.population;
                    if (two_col_standard_member(data.st[a], data.st[b]) != !!data.member[ra][b])
                        c.failures.push_back(data.st[a].to_string() + " | " +
                                             data.st[b].to_string() +
                                             ": prefix criterion disagrees");
                }
            }
            const int base = data.rs_of(two_col_base_tableau(shape).row_standard());
            for (int b = 0; b < nst; ++b) {
                ++c.population;
                if (!data.member[base][b])
                    c.failures.push_back(data.st[b].to_string() +
                                         ": base tableau misses a component");
            }
        });
    }

    if (family.two_row && select.stability) {
        run_check("transpose-bridge", [&](CheckResult& c) {
            const auto& dual = universe.get(shape.transposed());
            for (int a = 0; a < nst; ++a) {
                const int ra = data.rs_of(data.st[a].row_standard());
                for (int b = 0; b < nst; ++b) {
                    ++c.population;
                    if (!data.member[ra][b]) continue;
                    const auto ta = transpose_tableau(data.st[a]);
                    const auto tb = transpose_tableau(data.st[b]);
                    if (!dual.member[dual.rs_of(tb.row_standard())][dual.st_of(ta)])
                        c.failures.push_back(data.st[a].to_string() + " | " +
                                             data.st[b].to_string() +
                                             ": transposed pair left the component");
                }
            }
        });
    }

    if (select.counts)
    run_check("dominance-total-order", [&](CheckResult& c) {
        std::map<int, std::set<std::vector<int>>> by_size;
        for (int b = 0; b < nst; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    by_size[j - i].insert(data.tables[b].at(i, j).rows());
        for (int a = 0; a < nrs; ++a)
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    by_size[j - i].insert(quotient_shape_tau(data.rs[a], i, j).rows());
        for (const auto& [size, shapes] : by_size) {
            for (auto it = shapes.begin(); it != shapes.end(); ++it) {
                for (auto jt = std::next(it); jt != shapes.end(); ++jt) {
                    ++c.population;
                    if (!detail::dominates_rows(*it, *jt) && !detail::dominates_rows(*jt, *it))
                        c.failures.push_back("incomparable interval shapes of " +
                                             std::to_string(size) + " boxes");
                }
            }
        }
    });

    if (select.counts)
    run_check("dimension-formula", [&](CheckResult& c) {
        c.population = 1;
        const long dim = springer_dim(shape);
        if (family.two_row && dim != shape.row(2))
            c.failures.push_back("two-row dimension != second row length");
        if (family.hook) {
            const int col = shape.columns().empty() ? 0 : shape.columns()[0];
            if (dim != static_cast<long>(col) * (col - 1) / 2)
                c.failures.push_back("hook dimension != c(c-1)/2");
        }
    });

    // Codimension-one sets per family, as unordered pairs of standard
    // tableaux, cross-checked between all available routes.
    if (family.two_row && select.intersection) {
        run_check("intersection-evenness", [&](CheckResult& c) {
            for (int a = 0; a < nst; ++a) {
                for (int b = a + 1; b < nst; ++b) {
                    ++c.population;
                    bool shared = false;
                    for (int s = 0; s < nrs && !shared; ++s)
                        shared = is_standard(data.rs[s]) && data.member[s][a] && data.member[s][b];
                    const bool even = intersection_2row(data.st[a], data.st[b]).nonempty;
                    if (shared != even)
                        c.failures.push_back(data.st[a].to_string() + " | " +
                                             data.st[b].to_string() +
                                             ": meander evenness != shared member");
                }
            }
        });

        run_check("codim-one-triple", [&](CheckResult& c) {
            detail::PairSet meander_set;
            detail::PairSet condition_set;
            detail::PairSet vogan_pairs;
            for (int a = 0; a < nst; ++a) {
                for (int b = a + 1; b < nst; ++b) {
                    ++c.population;
                    if (intersection_2row(data.st[a], data.st[b]).codim_one)
                        meander_set.insert(detail::unordered_key(data.st[a], data.st[b]));
                    if (codim_one_condition_iii(data.st[a], data.st[b]))
                        condition_set.insert(detail::unordered_key(data.st[a], data.st[b]));
                }
            }
            for (const auto& pair : vogan_set(shape))
                vogan_pairs.insert(detail::unordered_key(pair.first, pair.second));
            if (meander_set != vogan_pairs)
                c.failures.push_back("meander codim-one set != closure of swap pairs");
            if (meander_set != condition_set)
                c.failures.push_back("meander codim-one set != first-row overlap set");
        });
    }

    if (family.hook && select.intersection) {
        run_check("hook-codim-one", [&](CheckResult& c) {
            detail::PairSet formula_set;
            detail::PairSet seed_set;
            for (int a = 0; a < nst; ++a) {
                for (int b = a + 1; b < nst; ++b) {
                    ++c.population;
                    // hook_intersection itself verifies the swap route.
                    if (hook_intersection(data.st[a], data.st[b]).codim_one)
                        formula_set.insert(detail::unordered_key(data.st[a], data.st[b]));
                }
            }
            for (const auto& pair : vogan_set(shape))
                seed_set.insert(detail::unordered_key(pair.first, pair.second));
            if (formula_set != seed_set)
                c.failures.push_back("codimension formula set != closure of swap pairs");
            for (int b = 0; b < nst; ++b) {
                for (int i = 2; i <= n - 1; ++i) {
                    if (!in_single_swap_domain(data.st[b], i)) continue;
                    if (!seed_set.count(
                            detail::unordered_key(data.st[b], vogan_t_i(data.st[b], i))))
                        c.failures.push_back(data.st[b].to_string() +
                                             ": swap pair missing from closure");
                }
            }
        });
    }

    if (family.two_column && select.intersection) {
        run_check("two-col-codim-one", [&](CheckResult& c) {
            detail::PairSet transpose_set;
            detail::PairSet vogan_pairs;
            for (int a = 0; a < nst; ++a) {
                for (int b = a + 1; b < nst; ++b) {
                    ++c.population;
                    const bool direct = two_col_codim_one(data.st[a], data.st[b]);
                    const auto ta = transpose_tableau(data.st[a]);
                    const auto tb = transpose_tableau(data.st[b]);
                    if (transpose_tableau(ta) != data.st[a] ||
                        transpose_tableau(tb) != data.st[b])
                        c.failures.push_back("transposition is not an involution");
                    if (direct != intersection_2row(ta, tb).codim_one)
                        c.failures.push_back(data.st[a].to_string() + " | " +
                                             data.st[b].to_string() +
                                             ": transposed classification disagrees");
                    if (direct)
                        transpose_set.insert(detail::unordered_key(data.st[a], data.st[b]));
                }
            }
            for (const auto& pair : vogan_set(shape))
                vogan_pairs.insert(detail::unordered_key(pair.first, pair.second));
            if (transpose_set != vogan_pairs)
                c.failures.push_back("transposed codim-one set != closure of swap pairs");
        });
    }

    if (select.intersection)
    run_check("codim-one-membership", [&](CheckResult& c) {
        for (int a = 0; a < nst; ++a) {
            for (int b = a + 1; b < nst; ++b) {
                ++c.population;
                if (!detail::codim_one_all_families(data.st[a], data.st[b])) continue;
                const int ra = data.rs_of(data.st[a].row_standard());
                const int rb = data.rs_of(data.st[b].row_standard());
                if (!data.member[ra][b] && !data.member[rb][a])
                    c.failures.push_back(data.st[a].to_string() + " | " +
                                         data.st[b].to_string() +
                                         ": codimension-one pair without membership");
            }
        }
    });

    if (select.separation)
    run_check("strict-quotient-separation", [&](CheckResult& c) {
        for (int a = 0; a < nst; ++a) {
            for (int b = 0; b < nst; ++b) {
                if (a == b) continue;
                ++c.population;
                bool found = false;
                for (int i = 0; i < n && !found; ++i)
                    for (int j = i + 1; j <= n && !found; ++j)
                        found = dominates(data.tables[a].at(i, j), data.tables[b].at(i, j)) &&
                                data.tables[a].at(i, j) != data.tables[b].at(i, j);
                if (!found)
                    c.failures.push_back(data.st[a].to_string() + " | " + data.st[b].to_string() +
                                         ": no strictly separating interval");
            }
        }
    });

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    return report;
}

inline ValidationReport cross_validate(const YoungDiagram& shape) {
    ShapeUniverse universe;
    return cross_validate(shape, universe);
}

/// The default validation suite: every family shape with at most eight
/// boxes runs all checks; two-row shapes between nine and max_boxes run the
/// intersection checks only (the other suites stay at eight boxes, where the
/// transposed universes remain small).
inline std::vector<std::pair<YoungDiagram, CheckSet>> default_suite(int max_boxes) {
    std::vector<std::pair<YoungDiagram, CheckSet>> out;
    for (const auto& shape : family_shapes(std::min(max_boxes, 8)))
        out.emplace_back(shape, CheckSet::all());
    for (const auto& shape : family_shapes(max_boxes)) {
        if (shape.size() <= 8 || shape.row_count() > 2) continue;
        out.emplace_back(shape, CheckSet::intersection_only());
    }
    return out;
}

} // namespace springer
