#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fr/csv.hpp"
#include "fr/scenario.hpp"
#include "fr/svg.hpp"

using namespace fr;

TEST_CASE("registry lists the documented scenarios") {
    auto names = scenario_names();
    for (const char* expected :
         {"fig1_rect_triangle", "ex_first_punctured_line", "ex_second_nonconvex",
          "ex_parabola_3d", "dim2_unbounded_finite", "strip_rect", "saturated"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    CHECK_THROWS_AS(load_scenario("nonexistent"), std::out_of_range);
}

TEST_CASE("registry payloads") {
    Scenario s = load_scenario("ex_second_nonconvex");
    CHECK(s.kind == ScenarioKind::PointCloud);
    CHECK(s.expected == ExpectedTag::LeftJump);
    CHECK(s.body_a == ConvexBody2::box(0, 0, 1, 1));
    REQUIRE(s.cloud_b.size() == 2);
    CHECK(approx_eq(s.cloud_b[1], Vec2{0.5, 6}));
    CHECK(s.param("critical_r") == 5.0);
    CHECK(s.param("jump") == 4.0);

    Scenario p = load_scenario("ex_parabola_3d");
    CHECK(p.kind == ScenarioKind::Predicate);
    CHECK(p.parabola_r1 == 1.0);
    CHECK(p.parabola_r2 == 2.0);

    Scenario m = load_scenario("ex_first_punctured_line");
    CHECK(m.kind == ScenarioKind::Metric);
    CHECK(m.space->size() == 101);
    CHECK(m.mask_a.count() == 1);
    CHECK(m.mask_b.count() == 101);

    Scenario f = load_scenario("fig1_rect_triangle");
    CHECK(f.body_b.kind() == BodyKind::Polygon);
    CHECK(f.body_b.verts().size() == 3);
}

TEST_CASE("every registered scenario matches its expected tag") {
    for (const std::string& name : scenario_names()) {
        Scenario s = load_scenario(name);
        ScenarioOutcome out = run_scenario(s);
        INFO(name);
        for (const std::string& line : out.measured) INFO(line);
        CHECK(out.matched);
    }
}

TEST_CASE("parser rejects malformed input with line info") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse_scenario_text(text, "test");
            return false;
        } catch (const std::runtime_error& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
    };
    CHECK(fails_with("[bogus]\n", "unknown section"));
    CHECK(fails_with("[space]\nkind = convex2d\n[A]\nwat = 1\n", "unknown key"));
    CHECK(fails_with("[space]\nkind = convex2d\n[A]\nwat = 1\n", "test:4"));
    CHECK(fails_with("[space]\nkind = triangle\n", "unknown [space] kind"));
    CHECK(fails_with("[space]\nkind = convex2d\nno_equals_here\n", "test:3"));
    CHECK(fails_with(
        "[space]\nkind = convex2d\n[A]\nvertices = 0,0; 1,0; 0,1\n[B]\nvertices = 2,2; 3,2; 2,3\n"
        "[norm]\nball = nonsense\n[expected]\ntag = lipschitz-pass\n",
        "unknown norm"));
    CHECK(fails_with(
        "[space]\nkind = convex2d\n[A]\nvertices = 0,0; 1,0; 0,1\n[B]\nvertices = 2,2; 3,2; 2,3\n"
        "[norm]\nball = sup\n[expected]\ntag = sideways-jump\n",
        "unknown expected tag"));
}

TEST_CASE("parsing a file body round-trips through the registry text") {
    for (const std::string& name : scenario_names()) {
        Scenario direct = load_scenario(name);
        Scenario reparsed = parse_scenario_text(scenario_source(name), "copy");
        CHECK(reparsed.kind == direct.kind);
        CHECK(reparsed.expected == direct.expected);
        CHECK(reparsed.params == direct.params);
    }
}

TEST_CASE("parabola distances") {
    PolygonalNorm e = PolygonalNorm::euclid(64);
    // Points already inside the wider epigraph have distance zero.
    CHECK(parabola_boundary_distance(3.0, 1.0, 2.0, e) == 0.0);
    // From (R, R^2/2) toward y >= x^2 the distance grows like R(1 - 1/sqrt(2)).
    double d10 = parabola_boundary_distance(10.0, 2.0, 1.0, e);
    double d100 = parabola_boundary_distance(100.0, 2.0, 1.0, e);
    CHECK(d10 == doctest::Approx(10.0 * 0.2929).epsilon(0.02));
    CHECK(d100 == doctest::Approx(100.0 * 0.2929).epsilon(0.02));

    std::vector<double> windows{10, 20, 40, 80};
    auto series = parabola_growth(1.0, 2.0, windows, e);
    CHECK(series.strictly_increasing());
    CHECK(series.verdict() == "unbounded");
}

TEST_CASE("parabola boundary sup is a lower bound for the windowed grid distance") {
    PolygonalNorm e = PolygonalNorm::euclid(32);
    auto p1 = oracle::SetPredicate([](Vec2 p) { return p.y >= p.x * p.x; });
    auto p2 = oracle::SetPredicate([](Vec2 p) { return p.y >= p.x * p.x / 2.0; });
    double R = 20.0;
    oracle::GridSpec g({0, 0}, R, R / 500.0);
    auto grid = oracle::grid_hausdorff(p1, p2, g, e);
    // Boundary points of the wider epigraph inside the window have |x| up
    // to sqrt(2R); the directed sup over them cannot exceed the symmetric
    // windowed Hausdorff value.
    double sup = 0.0;
    double x_max = std::sqrt(2.0 * R);
    for (int i = 0; i <= 64; ++i) {
        double x = x_max * i / 64;
        sup = std::max(sup, parabola_boundary_distance(x, 2.0, 1.0, e));
    }
    CHECK(sup <= grid.value + grid.error_bound + 1e-6);
}

TEST_CASE("curve csv round trip") {
    std::vector<CsvRow> rows;
    rows.push_back({0.25, std::nullopt, false, 4});
    rows.push_back({0.5, HausdorffValue::finite(0.123456789), false, 5});
    rows.push_back({1.0, HausdorffValue::infinite(), true, 0});
    std::string text = format_curve_csv(rows);
    CHECK(text == "r,dh_prev,empty,vertices\n"
                  "0.250000000,,0,4\n"
                  "0.500000000,0.123456789,0,5\n"
                  "1.000000000,inf,1,0\n");
    auto parsed = parse_curve_csv(text);
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0].r == 0.25);
    CHECK(!parsed[0].dh_prev.has_value());
    CHECK(parsed[1].dh_prev->value() == doctest::Approx(0.123456789));
    CHECK(parsed[2].dh_prev->is_infinite());
    CHECK(parsed[2].empty);

    CHECK_THROWS(parse_curve_csv("wrong,header\n"));
    CHECK_THROWS(parse_curve_csv("r,dh_prev,empty,vertices\n1.0,,0,4\n0.5,,0,4\n"));  // unsorted
    CHECK_THROWS(parse_curve_csv("r,dh_prev,empty,vertices\n1.0,abc,0,4\n"));
}

TEST_CASE("svg rendering is deterministic and clips unbounded bodies") {
    std::vector<SvgLayer> layers{{ConvexBody2::box(0, 0, 1, 1), "#4477aa", 0.5},
                                 {ConvexBody2::halfplane({0, 1}, 0), "#ee6677", 0.5}};
    std::string a = render_svg(layers, {0, 0}, 5.0);
    std::string b = render_svg(layers, {0, 0}, 5.0);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("stroke-dasharray") != std::string::npos);  // clipped halfplane
    CHECK(a.find("<polygon") != std::string::npos);
}
