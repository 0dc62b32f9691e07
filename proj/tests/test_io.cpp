#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coslice/json_io.hpp"
#include "coslice/render.hpp"
#include "coslice/sphere_literal.hpp"
#include "mackey_support.hpp"

using namespace coslice;
using namespace coslice::testing;

namespace {

// The worked example in its on-disk form, with the free generator first.
const char* kExampleJson =
    R"({"p":2,"n":1,"levels":[{"relations":[[2]]},{"relations":[[0],[2]]}],)"
    R"("act":[[[1]],[[1,0],[0,1]]],"res":[[[1,0]]],"tr":[[[0],[1]]]})";

}  // namespace

TEST_CASE("interchange round trips") {
    for (const MackeyFunctor& m :
         {make_E(), burnside_functor({2, 2}), burnside_functor({3, 1}), constant_z({5, 1}),
          dual_z({2, 3}), zero_functor({2, 1})}) {
        std::string text = mackey_to_json(m);
        MackeyFunctor back = mackey_from_json(text);
        CHECK(back == m);
        CHECK(mackey_to_json(back) == text);
    }
}

TEST_CASE("parsing normalizes arbitrary presentations") {
    MackeyFunctor parsed = mackey_from_json(kExampleJson);
    CHECK(parsed == make_E());

    // A redundant presentation of the same functor: extra generator killed
    // by a unit relation at the bottom level.
    const char* redundant =
        R"({"p":2,"n":1,"levels":[{"relations":[[2,0],[0,1]]},{"relations":[[0],[2]]}],)"
        R"("act":[[[1,0],[0,1]],[[1,0],[0,1]]],"res":[[[1,0],[0,0]]],"tr":[[[0,0],[1,0]]]})";
    CHECK(mackey_from_json(redundant) == make_E());
}

TEST_CASE("parse errors carry the schema violation") {
    CHECK_THROWS_AS(mackey_from_json("{"), parse_error);
    CHECK_THROWS_AS(mackey_from_json("[]"), parse_error);
    CHECK_THROWS_AS(mackey_from_json(R"({"p":2,"n":1})"), parse_error);
    CHECK_THROWS_AS(mackey_from_json(R"({"p":4,"n":0,"levels":[{"relations":[]}],)"
                                     R"("act":[[]],"res":[],"tr":[]})"),
                    parse_error);
    CHECK_THROWS_AS(mackey_from_json(R"({"p":2,"n":0,"levels":[{"relations":[]}],)"
                                     R"("act":[[]],"res":[],"tr":[],"extra":1})"),
                    parse_error);
    CHECK_THROWS_AS(mackey_from_json(R"({"p":2,"n":0,"levels":[{"relations":[[1.5]]}],)"
                                     R"("act":[[[1]]],"res":[],"tr":[]})"),
                    parse_error);
    // Ragged matrix.
    CHECK_THROWS_AS(mackey_from_json(R"({"p":2,"n":0,"levels":[{"relations":[[2],[3,4]]}],)"
                                     R"("act":[[[1,0],[0,1]]],"res":[],"tr":[]})"),
                    parse_error);
}

TEST_CASE("slice tower serialization") {
    SliceTower tower = slice_tower(make_E());
    std::string text = slice_tower_to_json(tower);
    CHECK(text.front() == '[');
    CHECK(text.find("\"dim\":0") != std::string::npos);
    CHECK(text.find("\"dim\":1") != std::string::npos);
    CHECK(text == slice_tower_to_json(slice_tower(make_E())));
}

TEST_CASE("sphere literals") {
    CyclicGroupSpec c2{2, 1}, c4{2, 2};

    SphereSpec a = parse_sphere_literal("2*rho - 2", c2);
    CHECK(a.v.mult == std::vector<long>{0, 2});
    CHECK(a.desusp == 0);
    SdimInterval ia = sdim_bounds(a);
    CHECK(ia.lower == 1);
    CHECK(ia.upper == 1);

    SphereSpec b = parse_sphere_literal("perm[1,1,0] - 1", c4);
    CHECK(b.v.mult == std::vector<long>{1, 0, 1});
    SdimInterval ib = sdim_bounds(b);
    CHECK(ib.lower == 2);
    CHECK(ib.upper == 2);

    SphereSpec zero = parse_sphere_literal("0", c2);
    CHECK(zero.v.dim() == 0);
    CHECK(zero.desusp == 0);

    SphereSpec c = parse_sphere_literal("lambda(1)^2 + 3*triv - 4", c4);
    CHECK(c.v.mult == std::vector<long>{0, 2, 0});
    CHECK(c.desusp == 1);

    // lambda indices fold into the real range.
    CHECK(parse_sphere_literal("lambda(3)", c4).v.mult == std::vector<long>{0, 1, 0});
    CHECK(parse_sphere_literal("lambda(0)", c4).v.mult == std::vector<long>{1, 0, 0});

    CHECK_THROWS_AS(parse_sphere_literal("", c2), parse_error);
    CHECK_THROWS_AS(parse_sphere_literal("lambda(1", c2), parse_error);
    CHECK_THROWS_AS(parse_sphere_literal("2*", c2), parse_error);
    CHECK_THROWS_AS(parse_sphere_literal("perm[1,1]", c4), parse_error);
    CHECK_THROWS_AS(parse_sphere_literal("rho + junk", c2), parse_error);
    CHECK_THROWS_AS(parse_sphere_literal("-lambda(1)", c4), std::domain_error);
}

TEST_CASE("text rendering") {
    CHECK(format_matrix(make_matrix({{1, 2}, {0, 1}})) == "[[1,2],[0,1]]");
    CHECK(format_matrix(IntMatrix::Zero(0, 0)) == "[]");

    std::string tower_text = slice_tower_text(slice_tower(burnside_functor({2, 1})));
    CHECK(tower_text.find("dim 0:") != std::string::npos);
    CHECK(tower_text.find("dim 1:") != std::string::npos);
    CHECK(tower_text == slice_tower_text(slice_tower(burnside_functor({2, 1}))));
}

TEST_CASE("charts") {
    ChartData chart = chart_from_tower(slice_tower(burnside_functor({2, 2})));
    REQUIRE(chart.markers.size() == 3);
    CHECK(chart.markers[0].filtration == 0);
    CHECK(chart.markers[1].filtration == 1);
    CHECK(chart.markers[2].filtration == 3);

    std::string text = chart_text(chart);
    CHECK(text.find("3 | *") != std::string::npos);
    CHECK(text.find("0 | *") != std::string::npos);

    ChartData c32 = chart_from_tower(slice_tower(burnside_functor({3, 2})));
    REQUIRE(c32.markers.size() == 3);
    CHECK(c32.markers[1].filtration == 2);
    CHECK(c32.markers[2].filtration == 8);

    ChartData single = chart_from_tower(slice_tower(constant_z({2, 2})));
    CHECK(single.markers.size() == 1);
    CHECK(single.markers[0].filtration == 0);

    std::string svg = chart_svg(chart);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("circle") != std::string::npos);
    CHECK(svg == chart_svg(chart));
}
