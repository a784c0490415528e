#include "helpers.hpp"

#include <cstdlib>

using namespace qtrace;
using namespace qtrace::testing;

TEST_CASE("analyze spot values") {
    auto r = analyze(builtin("T3"), {2, 3, false});
    CHECK(r["schema"] == 1);
    CHECK(r["center"]["rank"] == 729);
    CHECK(r["center"]["pi_degree"] == 27);
    CHECK(r["all_pass"].get<bool>());
    CHECK(analyze(builtin("S4"), {2, 3, false})["center"]["rank"] == 6561);
    r = analyze(builtin("S4"), {2, 3, true});
    CHECK(r["reduced"].get<bool>());
    CHECK(r["center"]["rank"] == 81);
    CHECK(r["all_pass"].get<bool>());
}

TEST_CASE("analyze agrees with analyze --reduced on shared fields") {
    for (const char* name : {"S4", "P5", "A11"}) {
        const auto a = analyze(builtin(name), {2, 5, false}), b = analyze(builtin(name), {2, 5, true});
        CHECK(a["invariants"] == b["invariants"]);
        CHECK(a["params"] == b["params"]);
    }
}

TEST_CASE("reports are deterministic") {
    CHECK(analyze(builtin("P5"), {3, 5, false}).dump() == analyze(builtin("P5"), {3, 5, false}).dump());
    CHECK(to_json(verify(builtin("S4"), 2, {3})).dump() == to_json(verify(builtin("S4"), 2, {3})).dump());
}

TEST_CASE("verify gating") {
    auto v = verify(builtin("T3"), 2, {3, 5});
    CHECK(v.ok());
    // interior puncture: trace skipped, cohomology still checked
    v = verify(punctured_triangle(), 2, {3});
    CHECK(v.ok());
    CHECK_FALSE(v.checks.empty());
    REQUIRE(v.skipped.size() == 1);
    CHECK(v.skipped[0].first == "trace");
    // even order: theorem checks skipped, identities asserted
    v = verify(builtin("S4"), 2, {4});
    CHECK(v.ok());
    bool skipped = false;
    for (const auto& [id, why] : v.skipped) skipped = skipped || id == "theorems@4";
    CHECK(skipped);
    bool has_blocks = false;
    for (const auto& c : v.checks) has_blocks = has_blocks || c.id == "ext.KH_nI";
    CHECK(has_blocks);
}

TEST_CASE("odd part pattern of the normal form") {
    for (const auto& s : builtin_examples()) {
        const auto inv = classify(parse_surface(s));
        for (int n : {2, 3, 4}) {
            const auto nf = antisym_normal_form(extended_data(parse_surface(s), n).P);
            const auto pc = odd_part_pattern(nf, inv, n, false);
            INFO(s.name << " n=" << n << " " << pc.detail);
            CHECK(pc.pass);
            CHECK(nf.zero_count == inv.t * (n - 1));
        }
    }
}

TEST_CASE("normal form report") {
    auto r = normal_form_report(mat({{0, 3}, {-3, 0}}));
    CHECK(r["h"] == nlohmann::json::array({3}));
    r = normal_form_report(mat({{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}));
    CHECK(r["h"] == nlohmann::json::array({2}));
    CHECK(r["zero_count"] == 1);
    CHECK(r["verified"].get<bool>());
}

TEST_CASE("grid parsing") {
    const Grid g = parse_grid("n=2,3;order=3,5,9,15");
    CHECK(g.n == std::vector<int>{2, 3});
    CHECK(g.order == std::vector<long long>{3, 5, 9, 15});
    CHECK(throws_code([] { parse_grid("n=2"); }, "InvalidArgument"));
    CHECK(throws_code([] { parse_grid("k=2;order=3"); }, "InvalidArgument"));
}

TEST_CASE("dimension cap") {
    setenv("QTRACE_MAX_DIM", "5", 1);
    CHECK(max_dim() == 5);
    CHECK(throws_code([] { analyze(builtin("T3"), {2, 3, false}); }, "DimensionCap"));
    unsetenv("QTRACE_MAX_DIM");
    CHECK(max_dim() == 2000);
}

TEST_CASE("torus checks on a fixture") {
    const IntMat P = extended_data(fixture("S4"), 2).P;
    CHECK(torus_commutation(P, 1000, kDefaultSeed).pass);
    CHECK(torus_inverse(P, 100, kDefaultSeed).pass);
}
