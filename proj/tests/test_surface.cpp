#include "helpers.hpp"

using namespace qtrace;
using namespace qtrace::testing;

TEST_CASE("fixture specs parse") {
    const Triangulation t3 = fixture("T3");
    CHECK(t3.num_faces == 1);
    CHECK(t3.boundary_edge_count() == 3);
    CHECK(t3.num_punctures == 3);

    const Triangulation s4 = fixture("S4");
    CHECK(s4.boundary_edge_count() == 4);
    CHECK(s4.num_punctures == 4);
    CHECK(s4.edges.size() == 5);
    CHECK_FALSE(s4.edges.front().boundary());
}

TEST_CASE("classify fixtures") {
    auto c = classify(fixture("T3"));
    CHECK(c.boundary_edges == 3);
    CHECK(c.chi_closed == 1);
    CHECK(c.chi == 1);
    CHECK(c.r == 2);
    CHECK(c.b == 1);
    CHECK(c.r_i == std::vector<int>{3});
    CHECK(c.t == 0);

    c = classify(fixture("S4"));
    CHECK(c.boundary_edges == 4);
    CHECK(c.chi == 1);
    CHECK(c.r == 3);
    CHECK(c.t == 1);

    c = classify(fixture("P5"));
    CHECK(c.r == 4);
    CHECK(c.r_i == std::vector<int>{5});

    // two faces glued along two slots: an annulus with one puncture per side
    c = classify(fixture("A11"));
    CHECK(c.V == 2);
    CHECK(c.E == 4);
    CHECK(c.F == 2);
    CHECK(c.chi == 0);
    CHECK(c.r == 2);
    CHECK(c.b == 2);
    CHECK(c.r_i == std::vector<int>{1, 1});
    CHECK(c.t == 0);
    CHECK(c.genus == 0);
}

TEST_CASE("vertex count formula") {
    for (const auto& s : builtin_examples()) {
        const auto c = classify(parse_surface(s));
        for (int n : {2, 3, 4}) {
            const auto d = extended_data(parse_surface(s), n);
            CHECK(static_cast<long long>(d.V.size()) == static_cast<long long>(n * n - 1) * c.r);
            const auto p = plain_trace(parse_surface(s), n);
            CHECK(p.nt.size() == (n * n - 1) * c.r - n * (n - 1) / 2 * c.boundary_edges);
        }
    }
}

TEST_CASE("validation errors") {
    CHECK(throws_code([] { parse_surface({"x", {0, 1}, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}}}); }, "DuplicateGluing"));
    CHECK(throws_code([] { parse_surface({"x", {0}, {{{0, 0}, {0, 0}}}}); }, "SelfGluedSlot"));
    CHECK(throws_code([] { parse_surface({"x", {0}, {{{0, 0}, {0, 1}}}}); }, "SelfFoldedTriangle"));
    CHECK(throws_code([] { parse_surface({"x", {0}, {{{3, 0}, {0, 1}}}}); }, "MalformedSpec"));
    CHECK(throws_code([] { builtin("Q7"); }, "UnknownSurface"));
    CHECK(throws_code([] { spec_from_json(nlohmann::json{{"name", "x"}}); }, "MalformedSpec"));
}

TEST_CASE("json round trip") {
    for (const auto& s : builtin_examples()) {
        const auto j = spec_to_json(s);
        const auto back = spec_from_json(j);
        CHECK(spec_to_json(back) == j);
    }
    const auto j = nlohmann::json::parse(R"({"name":"S4","faces":[0,1],"gluings":[{"a":[0,"e1"],"b":[1,"e1"]}]})");
    CHECK(spec_to_json(spec_from_json(j)) == spec_to_json(builtin("S4")));
    CHECK(slot_index("e3") == 2);
    CHECK(slot_name(1) == "e2");
}

TEST_CASE("boundary components follow the positive orientation") {
    const Triangulation s4 = fixture("S4");
    REQUIRE(s4.components.size() == 1);
    const auto& comp = s4.components[0];
    CHECK(comp.size() == 4);
    // consecutive boundary slots share a puncture: end of one is the start of the next
    for (std::size_t k = 0; k < comp.size(); ++k) {
        const SlotRef a = comp[k], b = comp[(k + 1) % comp.size()];
        CHECK(s4.corner[a.face][a.slot] == s4.corner[b.face][(b.slot + 1) % 3]);
    }
}

TEST_CASE("attach triangles") {
    const auto e3 = attach_triangles(fixture("T3"));
    CHECK(e3.tri.num_faces == 4);
    CHECK(e3.attached.size() == 3);
    const auto e4 = attach_triangles(fixture("S4"));
    CHECK(e4.tri.num_faces == 6);
    // attached faces are not glued to each other: two free sides each
    CHECK(classify(e4.tri).boundary_edges == 8);
    CHECK(classify(e4.tri).genus == classify(fixture("S4")).genus);
    CHECK(classify(e4.tri).b == classify(fixture("S4")).b);
}

TEST_CASE("closed surface has no boundary") {
    // two triangles glued into a three-punctured sphere
    const SurfaceSpec sphere{"sphere", {0, 1}, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}}};
    const Triangulation t = parse_surface(sphere);
    CHECK(t.components.empty());
    CHECK(classify(t).p_int == 3);
    CHECK(throws_code([&] { attach_triangles(t); }, "NoBoundary"));
}

TEST_CASE("polygon surfaces have the requested topology") {
    struct Case {
        int g;
        std::vector<int> rs;
    };
    for (const Case& c : {Case{0, {4}}, Case{0, {3, 2}}, Case{1, {1}}, Case{1, {2, 3}}, Case{0, {1, 1, 2}}, Case{2, {1}}}) {
        const auto inv = classify(parse_surface(polygon_surface(c.g, c.rs)));
        CHECK(inv.genus == c.g);
        CHECK(inv.b == static_cast<int>(c.rs.size()));
        auto got = inv.r_i, want = c.rs;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(inv.p_int == 0);
    }
}

TEST_CASE("interior puncture is detected") {
    const auto inv = classify(parse_surface(punctured_triangle()));
    CHECK(inv.p_int == 1);
    CHECK(inv.boundary_edges == 3);
    CHECK_FALSE(inv.no_interior_punctures);
    CHECK(throws_code([] { extended_data(parse_surface(punctured_triangle()), 2); }, "InteriorPuncture"));
}
