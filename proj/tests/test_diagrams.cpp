#include <catch2/catch_amalgamated.hpp>

#include "springer/diagrams.hpp"
#include "springer/enumerate.hpp"
#include "test_util.hpp"

using namespace springer;

TEST_CASE("dominance on explicit diagrams") {
    CHECK(dominates(YoungDiagram::parse("2,2,1"), YoungDiagram::parse("3,2")));
    CHECK_FALSE(dominates(YoungDiagram::parse("3,1"), YoungDiagram::parse("2,2")));
    CHECK(dominates(YoungDiagram::parse("2,2"), YoungDiagram::parse("3,1")));
    CHECK(dominates(YoungDiagram::parse("3,2"), YoungDiagram::parse("3,2")));
    CHECK_THROWS_AS(dominates(YoungDiagram::parse("2,1"), YoungDiagram::parse("2,2")),
                    std::invalid_argument);
}

TEST_CASE("empty diagram dominates only itself") {
    const YoungDiagram empty;
    CHECK(dominates(empty, empty));
    CHECK_THROWS_AS(dominates(empty, YoungDiagram::parse("1")), std::invalid_argument);
}

TEST_CASE("transpose") {
    CHECK(YoungDiagram::parse("3,2").transposed() == YoungDiagram::parse("2,2,1"));
    CHECK(YoungDiagram::parse("1,1,1").transposed() == YoungDiagram::parse("3"));
    CHECK(YoungDiagram::parse("5,4").transposed() == YoungDiagram::parse("2,2,2,2,1"));
}

TEST_CASE("classification into families") {
    auto f = classify(YoungDiagram::parse("4,1,1"));
    CHECK(f.hook);
    CHECK_FALSE(f.two_row);
    CHECK_FALSE(f.two_column);

    f = classify(YoungDiagram::parse("2,1"));
    CHECK((f.hook && f.two_row && f.two_column));

    f = classify(YoungDiagram::parse("3,2,1"));
    CHECK_FALSE(f.any());
}

TEST_CASE("fiber dimension formula") {
    CHECK(springer_dim(YoungDiagram::parse("1")) == 0);
    CHECK(springer_dim(YoungDiagram::parse("5,4")) == 4);
    CHECK(springer_dim(YoungDiagram::parse("2,2,1")) == 4);
}

TEST_CASE("dimension closed forms per family") {
    for (const auto& shape : family_shapes(8)) {
        const auto f = classify(shape);
        if (f.two_row) CHECK(springer_dim(shape) == shape.row(2));
        if (f.hook) {
            const int c = shape.columns().empty() ? 0 : shape.columns()[0];
            CHECK(springer_dim(shape) == static_cast<long>(c) * (c - 1) / 2);
        }
    }
}

TEST_CASE("dominance is a partial order on small diagrams") {
    const auto all = testutil::all_shapes(8);
    for (const auto& a : all) {
        CHECK(dominates(a, a));
        for (const auto& b : all) {
            if (a.size() != b.size()) continue;
            if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
            // dominance reverses under transposition
            CHECK(dominates(a, b) == dominates(b.transposed(), a.transposed()));
            for (const auto& c : all) {
                if (c.size() != a.size()) continue;
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("shape parsing rejects bad input") {
    CHECK_THROWS_AS(YoungDiagram::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram::parse("a"), std::invalid_argument);
    CHECK(YoungDiagram::parse(" 5 , 4 ") == YoungDiagram({5, 4}));
}
