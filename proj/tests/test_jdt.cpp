#include <catch2/catch_amalgamated.hpp>

#include "springer/enumerate.hpp"
#include "springer/jdt.hpp"
#include "test_util.hpp"

using namespace springer;

TEST_CASE("skew subtableaux of a standard tableau") {
    const auto t = StandardTableau::parse("1,2,4/3,5,8/6,7");
    const auto skew = skew_subtableau(t, 2, 6);
    CHECK(skew.inner() == YoungDiagram::parse("2"));
    CHECK(skew.outer() == YoungDiagram::parse("3,2,1"));
    CHECK(skew.to_string() == ".,.,4/3,5/6");

    const auto whole = skew_subtableau(t, 0, t.size());
    CHECK(whole.inner().empty());
    CHECK(whole.outer() == t.shape());

    CHECK(skew_subtableau(t, 3, 4).to_string() == ".,.,4/.");
    CHECK_THROWS_AS(skew_subtableau(t, 4, 4), std::out_of_range);
    CHECK_THROWS_AS(skew_subtableau(t, -1, 2), std::out_of_range);
}

TEST_CASE("rectification of worked skew tableaux") {
    const auto t1 = StandardTableau::parse("1,3,4/2,5,7/6");
    const auto r1 = rectify(skew_subtableau(t1, 3, 7));
    CHECK(r1.straight_rows() == std::vector<std::vector<int>>{{4, 7}, {5}, {6}});
    CHECK(r1.outer() == YoungDiagram::parse("2,1,1"));

    const auto t2 = StandardTableau::parse("1,2,4/3,5,8/6,7");
    const auto r2 = rectify(skew_subtableau(t2, 2, 6));
    CHECK(r2.straight_rows() == std::vector<std::vector<int>>{{3, 4}, {5}, {6}});

    // empty inner: rectification returns the input
    const auto whole = skew_subtableau(t2, 0, 8);
    CHECK(rectify(whole).grid() == whole.grid());
}

TEST_CASE("quotient shapes") {
    const auto t = StandardTableau::parse("1,2,4/3,5,8/6,7");
    CHECK(quotient_shape_T(t, 2, 6) == YoungDiagram::parse("2,1,1"));
    CHECK(quotient_shape_T(StandardTableau::parse("1,3,4/2,5,7/6"), 3, 7) ==
          YoungDiagram::parse("2,1,1"));
    CHECK(quotient_shape_T(t, 0, t.size()) == t.shape());

    const auto tau = RowStandardTableau::parse("2,3,7/4,6,8/1,5");
    CHECK(quotient_shape_tau(tau, 3, 7) == YoungDiagram::parse("2,1,1"));
    CHECK(quotient_shape_tau(tau, 0, 8) == tau.shape());
    for (int i = 0; i < 8; ++i)
        CHECK(quotient_shape_tau(tau, i, i + 1) == YoungDiagram::parse("1"));
}

TEST_CASE("rectified shape does not depend on the slide order") {
    for (const auto& shape : testutil::all_shapes(7)) {
        for (const auto& t : enumerate_standard(shape)) {
            for (int i = 0; i < t.size(); ++i) {
                for (int j = i + 1; j <= t.size(); ++j) {
                    const auto skew = skew_subtableau(t, i, j);
                    CHECK(rectify(skew, SlidePolicy::bottom_corner_first).outer() ==
                          rectify(skew, SlidePolicy::top_corner_first).outer());
                }
            }
        }
    }
}

TEST_CASE("rectification keeps the entries") {
    for (const auto& t : enumerate_standard(YoungDiagram::parse("3,2,1"))) {
        for (int i = 0; i < t.size(); ++i) {
            for (int j = i + 1; j <= t.size(); ++j) {
                std::vector<int> expect;
                for (int e = i + 1; e <= j; ++e) expect.push_back(e);
                std::vector<int> got;
                const auto rectified = rectify(skew_subtableau(t, i, j));
                for (const auto& row : rectified.straight_rows())
                    got.insert(got.end(), row.begin(), row.end());
                std::sort(got.begin(), got.end());
                CHECK(got == expect);
            }
        }
    }
}

TEST_CASE("tail shapes form a one-box-at-a-time chain") {
    const auto t = StandardTableau::parse("1,3,4/2,5,7/6");
    const int n = t.size();
    YoungDiagram prev;
    for (int i = 1; i <= n; ++i) {
        const auto cur = quotient_shape_T(t, n - i, n);
        CHECK(cur.size() == prev.size() + 1);
        int grown = 0;
        for (int p = 1; p <= cur.row_count(); ++p)
            if (cur.row(p) != prev.row(p)) ++grown;
        CHECK(grown == 1);
        prev = cur;
    }
}

TEST_CASE("schuetzenberger transform") {
    CHECK(schuetzenberger(StandardTableau::parse("1,3,4/2,5,7/6")) ==
          StandardTableau::parse("1,2,6/3,5,7/4"));
    CHECK(schuetzenberger(StandardTableau::parse("1,2,3/4,5,6/7")) ==
          StandardTableau::parse("1,3,4/2,6,7/5"));
}

TEST_CASE("schuetzenberger is a shape-preserving involution") {
    for (const auto& shape : testutil::all_shapes(8)) {
        for (const auto& t : enumerate_standard(shape)) {
            const auto ts = schuetzenberger(t);
            CHECK(ts.shape() == t.shape());
            CHECK(schuetzenberger(ts) == t);
        }
    }
}

TEST_CASE("prefix row counts of a standard tableau match its prefix shapes") {
    for (const auto& t : enumerate_standard(YoungDiagram::parse("3,2,2"))) {
        for (int i = 1; i <= t.size(); ++i)
            CHECK(quotient_shape_tau(t, 0, i) == quotient_shape_T(t, 0, i));
    }
}
