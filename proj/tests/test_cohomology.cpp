#include "helpers.hpp"

using namespace qtrace;
using namespace qtrace::testing;

TEST_CASE("cochain complex") {
    for (const auto& s : builtin_examples()) {
        const Triangulation t = parse_surface(s);
        const CochainComplex c = cochain_complex(t);
        CHECK(c.d0.rows() == t.num_punctures);
        CHECK(c.d1.rows() == static_cast<Index>(t.edges.size()));
        CHECK(all_zero<Int>(IntMat(c.d0 * c.d1)));
    }
}

TEST_CASE("cocycle counts match enumeration") {
    const auto& o = oracle()["cocycles"];
    for (const auto& s : builtin_examples()) {
        const Triangulation t = parse_surface(s);
        const auto inv = classify(t);
        for (long long k : {1, 2, 3, 5}) {
            INFO(s.name << " k=" << k);
            CHECK(cocycle_count(t, k) == o[s.name][std::to_string(k)].get<long long>());
            CHECK(cocycle_count(t, k) == int_pow(k, inv.r));
        }
    }
    CHECK(cocycle_count(fixture("T3"), 3) == 9);
    CHECK(cocycle_count(fixture("A11"), 3) == 9);
}

TEST_CASE("restricted cocycles") {
    const Triangulation t = fixture("T3");
    CHECK(restricted_cocycle_count(t, 6, 1) == cocycle_count(t, 6));
    CHECK(restricted_cocycle_count(t, 6, 6) == 1);
    CHECK(restricted_cocycle_count(t, 6, 2) == 9);
    CHECK(throws_code([&] { restricted_cocycle_count(t, 6, 4); }, "NotADivisor"));
}

TEST_CASE("exact sequence index") {
    for (const auto& s : builtin_examples())
        for (int n : {2, 3})
            for (long long k : {3, 5, 9}) {
                INFO(s.name << " n=" << n << " k=" << k);
                CHECK(exact_sequence_check(parse_surface(s), n, k));
            }
    // k = n: both sides are 1
    const Triangulation t = fixture("S4");
    const PlainTrace p = plain_trace(t, 3);
    const auto r = exact_sequence_index(t, balanced_lattice(p.nt, p.Hbar), 3, 3);
    CHECK(r.l == 3);
    CHECK(r.N == 3);
    CHECK(r.lattice_side == 1);
    CHECK(r.holds());
}

TEST_CASE("cocycles with an interior puncture") {
    const Triangulation t = parse_surface(punctured_triangle());
    // a disk: every cocycle is a coboundary, |Z^1| = k^{V-1}
    for (long long k : {2, 3}) CHECK(cocycle_count(t, k) == int_pow(k, t.num_punctures - 1));
}
