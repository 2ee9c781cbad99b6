// Acceptance suite: runs the worked-example reproductions and the exhaustive
// small-shape validations, one line per criterion. Exits nonzero when any
// criterion fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "springer/springer.hpp"

using namespace springer;

namespace {

struct AcceptanceCriterion {
    std::string name;
    double budget_seconds = 0.0;
    std::function<void(std::vector<std::string>&)> run;
};

#define EXPECT(...)                                                             \
    do {                                                                        \
        if (!(__VA_ARGS__))                                                     \
            failures.push_back(std::string("line ") + std::to_string(__LINE__) + \
                               ": " + #__VA_ARGS__);                            \
    } while (0)

void criterion_worked_examples(std::vector<std::string>& failures) {
    // standardization
    EXPECT(standardize(RowStandardTableau::parse("3,4,8/1,6,7/2,5")) ==
           StandardTableau::parse("1,4,7/2,5,8/3,6"));
    EXPECT(standardize(RowStandardTableau::parse("2,3/1")) == StandardTableau::parse("1,3/2"));

    // duality and the Schützenberger transform
    EXPECT(s_dual(RowStandardTableau::parse("3,4,7/1,5,6/2")) ==
           RowStandardTableau::parse("1,4,5/2,3,7/6"));
    EXPECT(s_dual(RowStandardTableau::parse("2,3,6/1,5,7/4")) ==
           RowStandardTableau::parse("2,5,6/1,3,7/4"));
    EXPECT(schuetzenberger(StandardTableau::parse("1,3,4/2,5,7/6")) ==
           StandardTableau::parse("1,2,6/3,5,7/4"));
    EXPECT(schuetzenberger(StandardTableau::parse("1,2,3/4,5,6/7")) ==
           StandardTableau::parse("1,3,4/2,6,7/5"));

    // interval shapes via sliding and via row counts
    EXPECT(quotient_shape_tau(RowStandardTableau::parse("2,3,7/4,6,8/1,5"), 3, 7) ==
           YoungDiagram::parse("2,1,1"));
    EXPECT(quotient_shape_T(StandardTableau::parse("1,2,4/3,5,8/6,7"), 2, 6) ==
           YoungDiagram::parse("2,1,1"));
    EXPECT(quotient_shape_T(StandardTableau::parse("1,3,4/2,5,7/6"), 3, 7) ==
           YoungDiagram::parse("2,1,1"));
    EXPECT(rectify(skew_subtableau(StandardTableau::parse("1,3,4/2,5,7/6"), 3, 7))
               .straight_rows() == std::vector<std::vector<int>>{{4, 7}, {5}, {6}});
    EXPECT(rectify(skew_subtableau(StandardTableau::parse("1,2,4/3,5,8/6,7"), 2, 6))
               .straight_rows() == std::vector<std::vector<int>>{{3, 4}, {5}, {6}});

    // the dominance pair on the six-box general shape
    {
        const auto [tau, t] = r_minus_k_pair(YoungDiagram::parse("3,2,1"));
        EXPECT(tau == RowStandardTableau::parse("1,2,5/4,6/3"));
        EXPECT(t == StandardTableau::parse("1,2,5/3,4/6"));
        EXPECT(dominance_member(tau, t).member);
    }

    // two-row reduction chain
    {
        const auto eta = two_row_eta(RowStandardTableau::parse("2,3,5/1,4"),
                                     StandardTableau::parse("1,3,4/2,5"));
        EXPECT(eta.size() == 2);
        EXPECT(eta[0].first == RowStandardTableau::parse("2/1"));
        EXPECT(eta[0].second == StandardTableau::parse("1/2"));
        EXPECT(eta[1].first == RowStandardTableau::parse("1,3/2"));
        EXPECT(eta[1].second == StandardTableau::parse("1,2/3"));
        const auto eta1 =
            two_row_eta(RowStandardTableau::parse("2/1"), StandardTableau::parse("1/2"));
        EXPECT(eta1.size() == 1 && eta1[0].first == RowStandardTableau::parse("1"));
        const auto eta2 =
            two_row_eta(RowStandardTableau::parse("1,3/2"), StandardTableau::parse("1,2/3"));
        EXPECT(eta2.size() == 1 && eta2[0].first == RowStandardTableau::parse("2/1"));
        EXPECT(two_row_A(RowStandardTableau::parse("2,3,5/1,4"),
                         StandardTableau::parse("1,3,4/2,5")));
    }

    // two-column reduction chain
    {
        const auto t = StandardTableau::parse("1,2/3,4/5,6/7/8");
        auto cur = RowStandardTableau::parse("2,4/1,7/3,6/8/5");
        auto step = two_col_eta(cur, t);
        EXPECT(step.first == RowStandardTableau::parse("3,4/1,7/2,6/8/5"));
        step = two_col_eta(step.first, t);
        EXPECT(step.first == RowStandardTableau::parse("3,4/1,7/5,6/8/2"));
        step = two_col_eta(step.first, t);
        EXPECT(step.first == RowStandardTableau::parse("3,4/1,2/5,6/8/7"));
        EXPECT(standardize(step.first) == t);
        EXPECT(two_col_A(cur, t));
    }

    // the six construction runs
    {
        const auto t2r = StandardTableau::parse("1,2,3,4,7/5,6,8,9");
        const auto fail2r =
            construct_two_row(RowStandardTableau::parse("2,3,6,8,9/1,4,5,7"), t2r);
        EXPECT(!fail2r.success && fail2r.failure_step == 5 && fail2r.failure_kind == 1);
        const auto ok2r = construct_two_row(RowStandardTableau::parse("1,4,6,8,9/2,3,5,7"), t2r);
        EXPECT(ok2r.success);

        const auto ok2c = construct_two_col(RowStandardTableau::parse("3,5/1,4/2"),
                                            StandardTableau::parse("1,2/3,4/5"));
        EXPECT(ok2c.success);
        for (const auto& f : ok2c.indices.back()) EXPECT(f == ExtInt(0));
        const auto fail2c = construct_two_col(RowStandardTableau::parse("2,6/3,5/4/1"),
                                              StandardTableau::parse("1,2/3,4/5/6"));
        EXPECT(!fail2c.success && fail2c.failure_step == 6 && fail2c.failure_kind == 2);

        const auto failh1 = construct_hook(RowStandardTableau::parse("2,4,5/3/1"),
                                           StandardTableau::parse("1,3,4/2/5"));
        EXPECT(!failh1.success && failh1.failure_step == 4 && failh1.failure_kind == 1);
        const auto failh2 = construct_hook(RowStandardTableau::parse("1,3,4/5/2"),
                                           StandardTableau::parse("1,2,5/3/4"));
        EXPECT(!failh2.success && failh2.failure_step == 4 && failh2.failure_kind == 2);
        const auto okh = construct_hook(RowStandardTableau::parse("2,3,5/4/1"),
                                        StandardTableau::parse("1,3,4/2/5"));
        EXPECT(okh.success);
    }

    // cup diagrams and meanders on nine boxes
    {
        const auto T = StandardTableau::parse("1,2,4,6,7/3,5,8,9");
        const auto S = StandardTableau::parse("1,2,5,6,7/3,4,8,9");
        const auto R = StandardTableau::parse("1,2,3,4,7/5,6,8,9");
        const auto dt = cup_diagram(T);
        EXPECT(dt.arcs == (std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {7, 8}, {6, 9}}));
        EXPECT(dt.fixed == std::vector<int>{1});
        EXPECT(cup_diagram(S).arcs ==
               (std::vector<std::pair<int, int>>{{2, 3}, {1, 4}, {7, 8}, {6, 9}}));
        const auto mts = meander(T, S);
        EXPECT(mts.loops == 3 && mts.even);
        EXPECT(mts.interval_lengths == std::vector<int>{2});
        EXPECT(intersection_2row(T, S).codim_one);
        const auto mtr = meander(T, R);
        EXPECT(mtr.loops == 3 && mtr.even);
        const auto msr = meander(S, R);
        EXPECT(msr.loops == 2 && msr.even);
        EXPECT(intersection_2row(S, R).dim == 2);

        // swap transformations generating the same pairs
        const auto Q = StandardTableau::parse("1,2,4,5,7/3,6,8,9");
        EXPECT(vogan_t_i(T, 4) == S);
        EXPECT(vogan_t_ab(Q, 4, true) == T);
        EXPECT(vogan_t_ab(vogan_t_i(Q, 3), 4, true) == R);
        const auto pairs = vogan_set(YoungDiagram::parse("5,4"));
        bool has_ts = false, has_tr = false;
        for (const auto& p : pairs) {
            has_ts = has_ts || (p.first == T && p.second == S) || (p.first == S && p.second == T);
            has_tr = has_tr || (p.first == T && p.second == R) || (p.first == R && p.second == T);
        }
        EXPECT(has_ts);
        EXPECT(has_tr);
    }
}

void criterion_equivalence(std::vector<std::string>& failures, ShapeUniverse& universe) {
    CheckSet only;
    only = CheckSet{false, true, false, false, false};
    for (const auto& shape : family_shapes(8)) {
        const auto report = cross_validate(shape, universe, only);
        for (const auto& check : report.checks)
            for (const auto& f : check.failures)
                failures.push_back(shape.to_string() + " " + check.name + ": " + f);
    }
}

void criterion_stability(std::vector<std::string>& failures, ShapeUniverse& universe) {
    CheckSet only{false, false, true, false, false};
    for (const auto& shape : family_shapes(8)) {
        const auto report = cross_validate(shape, universe, only);
        for (const auto& check : report.checks)
            for (const auto& f : check.failures)
                failures.push_back(shape.to_string() + " " + check.name + ": " + f);
    }
}

void criterion_intersections(std::vector<std::string>& failures, ShapeUniverse& universe) {
    CheckSet only{false, false, false, true, false};
    for (const auto& shape : family_shapes(8)) {
        const auto report = cross_validate(shape, universe, only);
        for (const auto& check : report.checks)
            for (const auto& f : check.failures)
                failures.push_back(shape.to_string() + " " + check.name + ": " + f);
    }
    for (const auto& shape : family_shapes(10)) {
        if (shape.size() <= 8 || shape.row_count() > 2) continue;
        const auto report = cross_validate(shape, universe, only);
        for (const auto& check : report.checks)
            for (const auto& f : check.failures)
                failures.push_back(shape.to_string() + " " + check.name + ": " + f);
    }
}

void criterion_separation(std::vector<std::string>& failures, ShapeUniverse& universe) {
    CheckSet only{false, false, false, false, true};
    for (const auto& shape : family_shapes(8)) {
        const auto report = cross_validate(shape, universe, only);
        for (const auto& check : report.checks)
            for (const auto& f : check.failures)
                failures.push_back(shape.to_string() + " " + check.name + ": " + f);
    }
}

void criterion_remark(std::vector<std::string>& failures) {
    EXPECT(remark_89_check());
    EXPECT(enumerate_rho(6).size() == 64);
    EXPECT(!classify(YoungDiagram::parse("3,2,1")).any());
}

void criterion_properties(std::vector<std::string>& failures) {
    std::mt19937 rng(987654321);
    std::vector<YoungDiagram> hooks, two_rows, two_cols;
    for (const auto& s : family_shapes(8)) {
        const auto f = classify(s);
        if (f.hook) hooks.push_back(s);
        if (f.two_row) two_rows.push_back(s);
        if (f.two_column) two_cols.push_back(s);
    }

    // 1000 draws per family
    for (const auto* pool : {&hooks, &two_rows, &two_cols}) {
        for (int round = 0; round < 1000; ++round) {
            const auto& shape = (*pool)[rng() % pool->size()];
            const auto st = enumerate_standard(shape);
            const auto rs = enumerate_row_standard(shape);
            const auto& t = st[rng() % st.size()];
            const auto& tau = rs[rng() % rs.size()];

            EXPECT(schuetzenberger(schuetzenberger(t)) == t);
            EXPECT(s_dual(s_dual(tau)) == tau);
            EXPECT(transpose_tableau(transpose_tableau(t)) == t);

            const int n = t.size();
            const int i = static_cast<int>(rng() % n);
            const int j = i + 1 + static_cast<int>(rng() % (n - i));
            const auto skew = skew_subtableau(t, i, j);
            EXPECT(rectify(skew, SlidePolicy::bottom_corner_first).outer() ==
                   rectify(skew, SlidePolicy::top_corner_first).outer());

            const auto& shape2 = two_rows[rng() % two_rows.size()];
            const auto st2 = enumerate_standard(shape2);
            const auto& a = st2[rng() % st2.size()];
            const auto& b = st2[rng() % st2.size()];
            const auto d = cup_diagram(a);
            for (auto [x, y] : d.arcs)
                for (auto [u, v] : d.arcs)
                    EXPECT(!(x < u && u < y && y < v));
            for (const auto& comp : meander(a, b).components)
                if (comp.loop) EXPECT(comp.length % 2 == 0);
        }
    }
}

} // namespace

int main() {
    ShapeUniverse universe;
    std::vector<AcceptanceCriterion> criteria = {
        {"1 worked examples reproduce exactly", 1.0,
         [](std::vector<std::string>& f) { criterion_worked_examples(f); }},
        {"2 dominance = inductive = construction on all shapes to 8 boxes", 60.0,
         [&](std::vector<std::string>& f) { criterion_equivalence(f, universe); }},
        {"3 stability suite on all shapes to 8 boxes", 120.0,
         [&](std::vector<std::string>& f) { criterion_stability(f, universe); }},
        {"4 intersection suite (two-row shapes to 10 boxes)", 120.0,
         [&](std::vector<std::string>& f) { criterion_intersections(f, universe); }},
        {"5 strict interval separation of distinct standard tableaux", 120.0,
         [&](std::vector<std::string>& f) { criterion_separation(f, universe); }},
        {"6 six-box counterexample sweep", 1.0,
         [](std::vector<std::string>& f) { criterion_remark(f); }},
        {"7 randomized structure properties (1000 rounds per family)", 120.0,
         [](std::vector<std::string>& f) { criterion_properties(f); }},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        std::vector<std::string> failures;
        const auto start = std::chrono::steady_clock::now();
        criterion.run(failures);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < criterion.budget_seconds;
        const bool pass = failures.empty() && in_budget;
        std::printf("criterion %-62s %s (%.2fs)\n", criterion.name.c_str(),
                    pass ? "PASS" : "FAIL", elapsed);
        if (!in_budget)
            std::printf("    over budget: %.2fs >= %.2fs\n", elapsed, criterion.budget_seconds);
        for (std::size_t k = 0; k < failures.size() && k < 10; ++k)
            std::printf("    %s\n", failures[k].c_str());
        if (failures.size() > 10)
            std::printf("    ... %zu more\n", failures.size() - 10);
        if (!pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
