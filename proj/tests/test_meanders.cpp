#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "springer/enumerate.hpp"
#include "springer/meanders.hpp"

using namespace springer;

namespace {
const StandardTableau kT = StandardTableau::parse("1,2,4,6,7/3,5,8,9");
const StandardTableau kS = StandardTableau::parse("1,2,5,6,7/3,4,8,9");
const StandardTableau kR = StandardTableau::parse("1,2,3,4,7/5,6,8,9");
} // namespace

TEST_CASE("cup diagrams of the worked tableaux") {
    const auto dt = cup_diagram(kT);
    CHECK(dt.arcs == std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {7, 8}, {6, 9}});
    CHECK(dt.fixed == std::vector<int>{1});

    const auto ds = cup_diagram(kS);
    CHECK(ds.arcs == std::vector<std::pair<int, int>>{{2, 3}, {1, 4}, {7, 8}, {6, 9}});
    CHECK(ds.fixed == std::vector<int>{5});

    const auto row = cup_diagram(StandardTableau::parse("1,2,3,4"));
    CHECK(row.arcs.empty());
    CHECK(row.fixed == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(cup_diagram(StandardTableau::parse("1,2/3/4")), std::invalid_argument);
}

TEST_CASE("meander statistics of the worked pairs") {
    const auto m = meander(kT, kS);
    CHECK(m.loops == 3);
    CHECK(m.interval_lengths == std::vector<int>{2});
    CHECK(m.even);

    const auto mr = meander(kT, kR);
    CHECK(mr.loops == 3);
    CHECK(mr.even);

    const auto sr = meander(kS, kR);
    CHECK(sr.loops == 2);
    CHECK(sr.even);
}

TEST_CASE("self meander doubles every arc") {
    const auto m = meander(kT, kT);
    CHECK(m.loops == 4);
    for (const auto& comp : m.components) {
        if (comp.loop)
            CHECK(comp.length == 2);
        else
            CHECK(comp.length == 0);
    }
    CHECK(m.even);
}

TEST_CASE("two-row intersection classification") {
    auto inter = intersection_2row(kT, kS);
    CHECK(inter.nonempty);
    CHECK(inter.dim == 3);
    CHECK(inter.codim_one); // second row has length 4

    inter = intersection_2row(kS, kR);
    CHECK(inter.nonempty);
    CHECK(inter.dim == 2);
    CHECK_FALSE(inter.codim_one);

    inter = intersection_2row(kT, kT);
    CHECK(inter.nonempty);
    CHECK(inter.dim == 4);
    CHECK_FALSE(inter.codim_one);
}

TEST_CASE("hook intersection classification") {
    auto inter = hook_intersection(StandardTableau::parse("1,3,4/2/5"),
                                   StandardTableau::parse("1,2,5/3/4"));
    CHECK(inter.nonempty);
    CHECK(inter.codim == 2);
    CHECK_FALSE(inter.codim_one);

    inter = hook_intersection(StandardTableau::parse("1,3,4/2/5"),
                              StandardTableau::parse("1,2,4/3/5"));
    CHECK(inter.nonempty);
    CHECK(inter.codim == 1);
    CHECK(inter.codim_one);

    const auto t = StandardTableau::parse("1,2,4/3/5");
    inter = hook_intersection(t, t);
    CHECK(inter.nonempty);
    CHECK(inter.codim == 0);
}

TEST_CASE("two-column codimension one through transposition") {
    // transposes of the worked nine-box pair
    const auto t = transpose_tableau(kT);
    const auto s = transpose_tableau(kS);
    CHECK(two_col_codim_one(t, s));
    CHECK_FALSE(two_col_codim_one(t, t));

    // odd transposed meander: empty intersection, no codimension one
    const auto a = StandardTableau::parse("1,2/3,4");
    const auto b = StandardTableau::parse("1,3/2,4");
    if (!intersection_2row(transpose_tableau(a), transpose_tableau(b)).nonempty)
        CHECK_FALSE(two_col_codim_one(a, b));
}

TEST_CASE("first-row overlap condition") {
    CHECK(codim_one_condition_iii(kT, kS));
    CHECK_FALSE(codim_one_condition_iii(kT, kT));
    CHECK_FALSE(codim_one_condition_iii(kS, kR));
}

TEST_CASE("arcs never cross and loops have even length") {
    std::mt19937 rng(424242);
    std::vector<YoungDiagram> shapes;
    for (const auto& shape : family_shapes(8))
        if (shape.row_count() <= 2) shapes.push_back(shape);
    for (int round = 0; round < 400; ++round) {
        const auto& shape = shapes[rng() % shapes.size()];
        const auto st = enumerate_standard(shape);
        const auto& t = st[rng() % st.size()];
        const auto& s = st[rng() % st.size()];

        const auto d = cup_diagram(t);
        for (auto [a, b] : d.arcs) {
            CHECK(a < b);
            for (auto [c, e] : d.arcs)
                CHECK_FALSE((a < c && c < b && b < e));
        }

        const auto m = meander(t, s);
        std::size_t covered = 0;
        for (const auto& comp : m.components) {
            if (comp.loop) CHECK(comp.length % 2 == 0);
            covered += comp.points.size();
        }
        CHECK(covered == static_cast<std::size_t>(t.size()));
        const int total_arcs = static_cast<int>(m.top.arcs.size() + m.bottom.arcs.size());
        CHECK(total_arcs == 2 * shape.row(2));
    }
}

TEST_CASE("svg rendering is deterministic") {
    const auto m = meander(kT, kS);
    const auto once = render_svg(m);
    CHECK(once == render_svg(m));
    CHECK(once.rfind("<svg", 0) == 0);
    CHECK(once.find("</svg>") != std::string::npos);

    const auto tiny = meander(StandardTableau::parse("1"), StandardTableau::parse("1"));
    const auto small = render_svg(tiny);
    CHECK(small.find(">1</text>") != std::string::npos);
}
